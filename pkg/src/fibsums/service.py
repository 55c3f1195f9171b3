"""FastAPI service exposing grid rendering, identity sweeps, and b-files.

Endpoints:

* GET /table   — rendered grid of either family (tsv, csv, or md)
* GET /verify/{identity} — run one identity sweep, return a report
* GET /bfile   — one row of either family as OEIS b-file plain text

Errors from the resource guards surface as HTTP 400 with a message.
"""
from __future__ import annotations

from typing import Literal

from fastapi import FastAPI, HTTPException, Query
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel

from . import identities, render, schreier
from .seq_core import TableTooLargeError

IDENTITIES = (
    "theorem1",
    "theorem2",
    "lemma_a3",
    "corollary_cs",
    "closed_form",
    "oracle",
)

Family = Literal["a", "s"]
Format = Literal["tsv", "csv", "md"]
IdentityName = Literal[
    "theorem1", "theorem2", "lemma_a3", "corollary_cs", "closed_form", "oracle"
]


class TableResponse(BaseModel):
    family: Family
    k_max: int
    n_max: int
    format: Format
    content: str
    values: list[list[int]]


class ViolationModel(BaseModel):
    k: int
    n: int
    lhs: int
    rhs: int


class VerifyResponse(BaseModel):
    identity: IdentityName
    k_range: tuple[int, int]
    n_range: tuple[int, int]
    checks: int
    passed: bool
    summary: str
    violations: list[ViolationModel]


app = FastAPI(
    title="fibsums",
    description=(
        "Exact iterated partial sums of the Fibonacci sequence, "
        "Schreier-set counts, and identity verification sweeps."
    ),
)


@app.get("/table", response_model=TableResponse)
def get_table(
    family: Family = Query("a"),
    kmax: int = Query(5, ge=0),
    nmax: int = Query(12, ge=1),
    format: Format = Query("tsv"),
) -> TableResponse:
    try:
        values = render.grid_values(family, kmax, nmax)
    except TableTooLargeError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return TableResponse(
        family=family,
        k_max=kmax,
        n_max=nmax,
        format=format,
        content=render.render_grid(values, format),
        values=values,
    )


def run_verifier(identity: str, k_max: int, n_max: int) -> identities.IdentityReport:
    """Dispatch one identity sweep over k up to k_max and n up to n_max."""
    if identity == "theorem1":
        if k_max < 1:
            raise ValueError("theorem1 requires kmax >= 1")
        return identities.verify_theorem1((1, k_max), (1, n_max))
    if identity == "theorem2":
        return schreier.verify_theorem2((0, k_max), (1, n_max))
    if identity == "lemma_a3":
        return identities.verify_lemma_a3((0, k_max))
    if identity == "corollary_cs":
        return schreier.verify_corollary_cs((0, k_max), (1, n_max))
    if identity == "closed_form":
        return identities.verify_closed_form((0, k_max), (1, n_max))
    if identity == "oracle":
        return schreier.verify_oracle((0, k_max), (1, n_max))
    raise ValueError(f"unknown identity {identity!r}, expected one of {IDENTITIES}")


@app.get("/verify/{identity}", response_model=VerifyResponse)
def get_verify(
    identity: IdentityName,
    kmax: int = Query(5, ge=0),
    nmax: int = Query(12, ge=1),
) -> VerifyResponse:
    try:
        report = run_verifier(identity, kmax, nmax)
    except (TableTooLargeError, schreier.GroundSetTooLargeError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return VerifyResponse(
        identity=identity,
        k_range=report.k_range,
        n_range=report.n_range,
        checks=report.checks,
        passed=report.passed,
        summary=report.summary(),
        violations=[
            ViolationModel(k=k, n=n, lhs=lhs, rhs=rhs)
            for k, n, lhs, rhs in report.violations
        ],
    )


@app.get("/bfile", response_class=PlainTextResponse)
def get_bfile(
    family: Family = Query("a"),
    k: int = Query(0, ge=0),
    nmax: int = Query(12, ge=1),
) -> str:
    try:
        values = render.row_values(family, k, nmax)
    except TableTooLargeError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return render.render_bfile(values)
