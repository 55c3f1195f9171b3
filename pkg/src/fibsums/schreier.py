"""Counting Schreier sets: subsets S of {1..n} with min S >= |S|.

s(n, k) counts the Schreier subsets of {1..n} of size at least k, the empty
set included when k = 0 (forced by s(1, 0) = 2 and the Fibonacci base row).
The production path is a binomial sum; a bitmask enumerator exists purely
as a brute-force oracle.
"""
from __future__ import annotations

from .identities import IdentityReport, binom
from .seq_core import a

#: Largest ground set the brute-force enumerator will accept (2^25 masks).
ENUMERATION_GUARD = 25

#: Within identity sweeps, cross-check against the enumerator only up to
#: this n; beyond it, per-cell enumeration dominates the sweep's runtime.
ENUM_CROSSCHECK_LIMIT = 15


class GroundSetTooLargeError(ValueError):
    """Enumeration over 2^n subsets refused for n above the guard."""


def count_exact_size(n: int, k: int) -> int:
    """Number of S in {1..n} with |S| = k and min S >= k: C(n-k+1, k)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return binom(n - k + 1, k)


def s_formula(n: int, k: int) -> int:
    """Schreier subsets of {1..n} with size >= k, by binomial sum.

    Sizes above floor((n+1)/2) contribute nothing, so the sum truncates
    there; the empty set is counted only when k = 0.  n = 0 is allowed
    (empty ground set).
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    total = 1 if k == 0 else 0
    for size in range(max(k, 1), (n + 1) // 2 + 1):
        total += count_exact_size(n, size)
    return total


def is_schreier(elements: frozenset[int] | set[int]) -> bool:
    """True for the empty set and for any set with min >= cardinality."""
    return not elements or min(elements) >= len(elements)


def s_enumerate(n: int, k: int, guard: int = ENUMERATION_GUARD) -> int:
    """Brute-force count over all 2^n bitmask subsets of {1..n}.

    Oracle for :func:`s_formula`; refuses n above ``guard``.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if n > guard:
        raise GroundSetTooLargeError(
            f"ground set too large: n={n} exceeds the enumeration guard {guard}"
        )
    count = 1 if k == 0 else 0  # mask 0, the empty set
    for mask in range(1, 1 << n):
        size = mask.bit_count()
        # bit i set means element i+1 is in S, so min S = lowest set bit + 1.
        if size >= k and (mask & -mask).bit_length() >= size:
            count += 1
    return count


def verify_corollary_cs(
    l_range: tuple[int, int], n_range: tuple[int, int]
) -> IdentityReport:
    """Check s(n, l+1) = s(n, l) - C(n-l+1, l) over the rectangle."""
    report = IdentityReport("corollary_cs", l_range, n_range)
    for l in range(l_range[0], l_range[1] + 1):
        for n in range(n_range[0], n_range[1] + 1):
            lhs = s_formula(n, l + 1)
            rhs = s_formula(n, l) - binom(n - l + 1, l)
            report.checks += 1
            if lhs != rhs:
                report.violations.append((l, n, lhs, rhs))
    return report


def verify_theorem2(
    k_range: tuple[int, int],
    n_range: tuple[int, int],
    enum_limit: int = ENUM_CROSSCHECK_LIMIT,
) -> IdentityReport:
    """Check s(n, k) = a(k, n - 2(k-1)) over the rectangle.

    The a-side uses the zero convention for nonpositive arguments.  Where
    n <= enum_limit the formula side is additionally cross-checked against
    the brute-force enumerator.
    """
    report = IdentityReport("theorem2", k_range, n_range)
    for k in range(k_range[0], k_range[1] + 1):
        for n in range(n_range[0], n_range[1] + 1):
            lhs = s_formula(n, k)
            rhs = a(k, n - 2 * (k - 1))
            report.checks += 1
            if lhs != rhs:
                report.violations.append((k, n, lhs, rhs))
            if n <= enum_limit:
                enum = s_enumerate(n, k)
                report.checks += 1
                if enum != lhs:
                    report.violations.append((k, n, enum, lhs))
    return report


def verify_oracle(
    k_range: tuple[int, int], n_range: tuple[int, int]
) -> IdentityReport:
    """Check s_enumerate = s_formula over the rectangle (n capped by guard)."""
    report = IdentityReport("oracle", k_range, n_range)
    for k in range(k_range[0], k_range[1] + 1):
        for n in range(n_range[0], n_range[1] + 1):
            lhs = s_enumerate(n, k)
            rhs = s_formula(n, k)
            report.checks += 1
            if lhs != rhs:
                report.violations.append((k, n, lhs, rhs))
    return report
