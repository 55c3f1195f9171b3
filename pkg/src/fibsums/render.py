"""Plain-text rendering of sequence grids and OEIS b-file rows.

All numbers render as bare decimal with no grouping so outputs stay
diffable against checked-in golden files.  TSV is the canonical format.
"""
from __future__ import annotations

from . import schreier, seq_core

FAMILIES = ("a", "s")
FORMATS = ("tsv", "csv", "md")

#: Corner label of the grid header, mirroring the published table layout.
CORNER = "k\\n"


def grid_values(family: str, k_max: int, n_max: int) -> list[list[int]]:
    """Rows k = 0..k_max of either family, positions n = 1..n_max.

    Both families share the (k_max+1) x n_max cell-count guard.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}, expected one of {FAMILIES}")
    if k_max < 0:
        raise ValueError(f"k_max must be >= 0, got {k_max}")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if family == "a":
        return seq_core.table(k_max, n_max).grid(k_max, n_max)
    seq_core.guard_cells(k_max, n_max)
    return [
        [schreier.s_formula(n, k) for n in range(1, n_max + 1)]
        for k in range(k_max + 1)
    ]


def render_grid(rows: list[list[int]], fmt: str = "tsv") -> str:
    """Render rows (indexed k = 0.., n = 1..) with header row and k column."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")
    n_max = len(rows[0])
    header = [CORNER] + [str(n) for n in range(1, n_max + 1)]
    body = [[str(k)] + [str(v) for v in row] for k, row in enumerate(rows)]
    if fmt == "tsv":
        return "".join("\t".join(cells) + "\n" for cells in [header] + body)
    if fmt == "csv":
        return "".join(",".join(cells) + "\n" for cells in [header] + body)
    lines = ["| " + " | ".join(header) + " |"]
    lines.append("|" + "---|" * len(header))
    lines.extend("| " + " | ".join(cells) + " |" for cells in body)
    return "\n".join(lines) + "\n"


def parse_grid(text: str, fmt: str = "tsv") -> list[list[int]]:
    """Inverse of render_grid on the data cells; used for round-trip checks."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")
    lines = [line for line in text.splitlines() if line]
    if fmt == "md":
        lines = [line for line in lines if set(line) - set("|- ")]
        cells = [[c.strip() for c in line.strip("|").split("|")] for line in lines]
    else:
        sep = "\t" if fmt == "tsv" else ","
        cells = [line.split(sep) for line in lines]
    return [[int(v) for v in row[1:]] for row in cells[1:]]


def row_values(family: str, k: int, n_max: int) -> list[int]:
    """One row of either family; guarded by the same cell budget as grids."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}, expected one of {FAMILIES}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if family == "a":
        # Computing row k materializes rows 0..k, so guard the full triangle.
        seq_core.guard_cells(k, n_max)
        return seq_core.table(k, n_max).row(k, n_max)
    seq_core.guard_cells(0, n_max)
    return [schreier.s_formula(n, k) for n in range(1, n_max + 1)]


def render_bfile(values: list[int], start: int = 1) -> str:
    """OEIS b-file text: one "index value" pair per line, indices ascending."""
    return "".join(f"{start + i} {v}\n" for i, v in enumerate(values))
