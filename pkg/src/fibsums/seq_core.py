"""Fibonacci numbers and their iterated partial sums, computed exactly.

The central object is the triangular table whose row 0 is the Fibonacci
sequence and whose row k is the running prefix sum of row k-1.  Everything
is plain Python ``int`` arithmetic, so values are exact at any size.
"""
from __future__ import annotations

import itertools
import os
import threading

DEFAULT_MAX_CELLS = 10**7
MAX_CELLS_ENV = "FIBSUMS_MAX_CELLS"


class TableTooLargeError(ValueError):
    """Requested grid exceeds the cell-count resource guard."""


def max_cells_limit() -> int:
    """Cell-count guard, overridable via the FIBSUMS_MAX_CELLS env var."""
    raw = os.environ.get(MAX_CELLS_ENV)
    if raw is None:
        return DEFAULT_MAX_CELLS
    limit = int(raw)
    if limit <= 0:
        raise ValueError(f"{MAX_CELLS_ENV} must be a positive integer, got {raw!r}")
    return limit


def fib(n: int) -> int:
    """Return the n-th Fibonacci number with F_1 = F_2 = 1.

    Nonpositive indices are rejected: the zero convention for out-of-range
    arguments belongs to :func:`a`, not to the Fibonacci sequence itself.
    """
    if n <= 0:
        raise ValueError(f"Fibonacci index must be >= 1, got {n}")
    prev, cur = 1, 1
    for _ in range(n - 1):
        prev, cur = cur, prev + cur
    return prev


def partial_sums(prefix: list[int]) -> list[int]:
    """Running sums of a finite prefix; output has the same length."""
    return list(itertools.accumulate(prefix))


class PrefixTable:
    """Append-only memoized cache of iterated partial sums of Fibonacci.

    Row k holds the first ``len(row)`` values of the sequence obtained by
    applying the partial-sum operator k times; cached cells never change.
    Safe for concurrent readers: all mutation happens under a lock.
    """

    def __init__(self) -> None:
        self._rows: list[list[int]] = [[1, 1]]
        self._lock = threading.Lock()

    @property
    def max_k(self) -> int:
        return len(self._rows) - 1

    @property
    def max_n(self) -> int:
        return len(self._rows[0])

    @property
    def cell_count(self) -> int:
        return sum(len(row) for row in self._rows)

    def value(self, k: int, n: int) -> int:
        """The n-th value of row k, 0 for n <= 0 (zero convention)."""
        if k < 0:
            raise ValueError(f"row index must be >= 0, got {k}")
        if n <= 0:
            return 0
        with self._lock:
            self._ensure(k, n)
            return self._rows[k][n - 1]

    def row(self, k: int, n_max: int) -> list[int]:
        """Values 1..n_max of row k as a list."""
        if n_max < 1:
            raise ValueError(f"row length must be >= 1, got {n_max}")
        with self._lock:
            self._ensure(k, n_max)
            return self._rows[k][:n_max]

    def grid(self, k_max: int, n_max: int) -> list[list[int]]:
        """Rows 0..k_max, each truncated to positions 1..n_max."""
        with self._lock:
            self._ensure(k_max, n_max)
            return [self._rows[k][:n_max] for k in range(k_max + 1)]

    def _ensure(self, k: int, n: int) -> None:
        # Row j needs row j-1 filled through position n, so extend top-down.
        row0 = self._rows[0]
        while len(row0) < n:
            row0.append(row0[-1] + row0[-2])
        # Skip rows already long enough; fill resumes at the deepest such row.
        start = min(k, len(self._rows) - 1)
        while start > 0 and len(self._rows[start]) < n:
            start -= 1
        for j in range(start + 1, k + 1):
            if j == len(self._rows):
                self._rows.append([])
            prev = self._rows[j - 1]
            row = self._rows[j]
            if not row:
                row.append(prev[0])
            while len(row) < n:
                row.append(row[-1] + prev[len(row)])


_shared = PrefixTable()


def a(k: int, n: int) -> int:
    """n-th value after applying the partial-sum operator k times to Fibonacci.

    a(0, n) is the n-th Fibonacci number; a(k, n) = 0 for any n <= 0.
    Memoized in a shared process-wide table.
    """
    return _shared.value(k, n)


def table(k_max: int, n_max: int, max_cells: int | None = None) -> PrefixTable:
    """Fresh, fully populated table of rows 0..k_max and positions 1..n_max.

    Rejects requests whose cell count exceeds the guard (default 10^7 cells,
    overridable via FIBSUMS_MAX_CELLS or the ``max_cells`` argument).
    """
    if k_max < 0:
        raise ValueError(f"k_max must be >= 0, got {k_max}")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    guard_cells(k_max, n_max, max_cells)
    t = PrefixTable()
    t.grid(k_max, n_max)
    return t


def guard_cells(k_max: int, n_max: int, max_cells: int | None = None) -> None:
    """Raise TableTooLargeError when a (k_max+1) x n_max grid is over budget."""
    limit = max_cells_limit() if max_cells is None else max_cells
    cells = (k_max + 1) * n_max
    if cells > limit:
        raise TableTooLargeError(
            f"table too large: {cells} cells exceeds the limit of {limit}"
        )
