"""Command-line front end, a thin HTTP client of the FastAPI service.

Without ``--server`` the app is mounted in-process, so the CLI works
standalone; with ``--server URL`` the same requests go to a running
instance.  Results go to stdout, diagnostics to stderr; exit status is 0
only on success (for ``verify``, only when every check passed).
"""
from __future__ import annotations

import sys
import warnings

import click
import httpx

from .render import FAMILIES, FORMATS
from .service import IDENTITIES, app

MAX_PRINTED_VIOLATIONS = 10


def _make_client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server)
    with warnings.catch_warnings():
        # starlette warns about its httpx-based TestClient at import time
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    return TestClient(app, raise_server_exceptions=False)


def _get(client: httpx.Client, path: str, params: dict) -> httpx.Response:
    try:
        return client.get(path, params=params)
    except httpx.HTTPError as exc:
        click.echo(f"error: request to {path} failed: {exc}", err=True)
        sys.exit(2)


def _fail(response: httpx.Response) -> None:
    try:
        detail = response.json().get("detail", response.text)
    except ValueError:
        detail = response.text
    click.echo(f"error: {detail}", err=True)
    sys.exit(2)


@click.group()
@click.option(
    "--server",
    default=None,
    metavar="URL",
    help="Base URL of a running service; defaults to an in-process instance.",
)
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Exact Fibonacci partial-sum tables, Schreier counts, and identity checks."""
    ctx.obj = _make_client(server)
    ctx.call_on_close(ctx.obj.close)


@main.command()
@click.option("--family", type=click.Choice(FAMILIES), default="a", show_default=True)
@click.option("--kmax", type=click.IntRange(min=0), default=5, show_default=True)
@click.option("--nmax", type=click.IntRange(min=1), default=12, show_default=True)
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="tsv", show_default=True)
@click.pass_obj
def table(client: httpx.Client, family: str, kmax: int, nmax: int, fmt: str) -> None:
    """Print the grid of rows k = 0..KMAX, positions n = 1..NMAX."""
    resp = _get(
        client,
        "/table",
        params={"family": family, "kmax": kmax, "nmax": nmax, "format": fmt},
    )
    if resp.status_code != 200:
        _fail(resp)
    click.echo(resp.json()["content"], nl=False)


@main.command()
@click.argument("identity", type=click.Choice(IDENTITIES))
@click.option("--kmax", type=click.IntRange(min=0), default=5, show_default=True)
@click.option("--nmax", type=click.IntRange(min=1), default=12, show_default=True)
@click.pass_obj
def verify(client: httpx.Client, identity: str, kmax: int, nmax: int) -> None:
    """Sweep one identity; exit 0 only if every check passes."""
    resp = _get(client, f"/verify/{identity}", params={"kmax": kmax, "nmax": nmax})
    if resp.status_code != 200:
        _fail(resp)
    body = resp.json()
    click.echo(body["summary"])
    for v in body["violations"][:MAX_PRINTED_VIOLATIONS]:
        click.echo(f"  k={v['k']} n={v['n']} lhs={v['lhs']} rhs={v['rhs']}", err=True)
    hidden = len(body["violations"]) - MAX_PRINTED_VIOLATIONS
    if hidden > 0:
        click.echo(f"  ... and {hidden} more violations", err=True)
    if not body["passed"]:
        sys.exit(1)


@main.command()
@click.option("--family", type=click.Choice(FAMILIES), default="a", show_default=True)
@click.option("--k", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("--nmax", type=click.IntRange(min=1), default=12, show_default=True)
@click.pass_obj
def bfile(client: httpx.Client, family: str, k: int, nmax: int) -> None:
    """Print row k in OEIS b-file format: one "n value" pair per line."""
    resp = _get(client, "/bfile", params={"family": family, "k": k, "nmax": nmax})
    if resp.status_code != 200:
        _fail(resp)
    click.echo(resp.text, nl=False)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
