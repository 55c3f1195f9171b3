"""Exact binomial coefficients and identity verification for the a-table.

Verified identities, each over a configurable rectangle of (k, n):

* the shift identity  a(k, n) = a(k-1, n+2) - C(n+k, k-1)  for k >= 1,
* its k=1 specialization  sum F_m = F_{n+2} - 1,
* the third-column formula  a(k, 3) = C(k+2, k) + 1,
* a telescoped closed form for a(k, n) built from Fibonacci and binomials.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .seq_core import a, fib

#: One failed check: (k, n, left-hand side, right-hand side).
Violation = tuple[int, int, int, int]


class IdentityUnderflowError(ArithmeticError):
    """A subtraction that the identity guarantees nonnegative went negative."""


@dataclass
class IdentityReport:
    """Outcome of sweeping one identity over a rectangle of (k, n)."""

    identity_name: str
    k_range: tuple[int, int]
    n_range: tuple[int, int]
    checks: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.checks - len(self.violations)}/{self.checks} checks"
            f" ({self.identity_name})"
        )


def binom(n: int, k: int) -> int:
    """C(n, k), total: 0 whenever k < 0, n < 0, or k > n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def _checked_sub(minuend: int, subtrahend: int, context: str) -> int:
    if subtrahend > minuend:
        raise IdentityUnderflowError(
            f"identity underflow in {context}: {minuend} - {subtrahend} < 0"
        )
    return minuend - subtrahend


def theorem1_rhs(k: int, n: int) -> int:
    """a(k-1, n+2) - C(n+k, k-1); equals a(k, n) for every k >= 1, n >= 1."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return _checked_sub(a(k - 1, n + 2), binom(n + k, k - 1), f"shift identity k={k} n={n}")


def lemma_a3(k: int) -> int:
    """C(k+2, k) + 1; equals a(k, 3) for every k >= 0."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return binom(k + 2, k) + 1


def a_closed(k: int, n: int) -> int:
    """a(k, n) by closed form: F_{n+2k} minus a sum of k binomials.

    Telescopes the shift identity down to row 0, so no table row is built;
    the memoized table engine serves as the independent oracle.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    correction = sum(binom(n + 2 * k - i, i - 1) for i in range(1, k + 1))
    return _checked_sub(fib(n + 2 * k), correction, f"closed form k={k} n={n}")


def verify_theorem1(
    k_range: tuple[int, int], n_range: tuple[int, int]
) -> IdentityReport:
    """Check a(k, n) = a(k-1, n+2) - C(n+k, k-1) over the rectangle."""
    k_lo, k_hi = k_range
    if k_lo < 1:
        raise ValueError(f"shift identity requires k >= 1, got k_lo={k_lo}")
    report = IdentityReport("theorem1", k_range, n_range)
    for k in range(k_lo, k_hi + 1):
        for n in range(n_range[0], n_range[1] + 1):
            lhs = a(k, n)
            rhs = theorem1_rhs(k, n)
            report.checks += 1
            if lhs != rhs:
                report.violations.append((k, n, lhs, rhs))
    return report


def verify_lemma_a3(k_range: tuple[int, int]) -> IdentityReport:
    """Check a(k, 3) = C(k+2, k) + 1 for every k in range."""
    report = IdentityReport("lemma_a3", k_range, (3, 3))
    for k in range(k_range[0], k_range[1] + 1):
        lhs = a(k, 3)
        rhs = lemma_a3(k)
        report.checks += 1
        if lhs != rhs:
            report.violations.append((k, 3, lhs, rhs))
    return report


def verify_closed_form(
    k_range: tuple[int, int], n_range: tuple[int, int]
) -> IdentityReport:
    """Check a_closed(k, n) = a(k, n) over the rectangle."""
    report = IdentityReport("closed_form", k_range, n_range)
    for k in range(k_range[0], k_range[1] + 1):
        for n in range(n_range[0], n_range[1] + 1):
            lhs = a_closed(k, n)
            rhs = a(k, n)
            report.checks += 1
            if lhs != rhs:
                report.violations.append((k, n, lhs, rhs))
    return report
