"""Exact iterated partial sums of the Fibonacci sequence and Schreier counts."""

from .identities import (
    IdentityReport,
    IdentityUnderflowError,
    a_closed,
    binom,
    lemma_a3,
    theorem1_rhs,
    verify_closed_form,
    verify_lemma_a3,
    verify_theorem1,
)
from .schreier import (
    GroundSetTooLargeError,
    count_exact_size,
    is_schreier,
    s_enumerate,
    s_formula,
    verify_corollary_cs,
    verify_oracle,
    verify_theorem2,
)
from .seq_core import PrefixTable, TableTooLargeError, a, fib, partial_sums, table

__all__ = [
    "GroundSetTooLargeError",
    "IdentityReport",
    "IdentityUnderflowError",
    "PrefixTable",
    "TableTooLargeError",
    "a",
    "a_closed",
    "binom",
    "count_exact_size",
    "fib",
    "is_schreier",
    "lemma_a3",
    "partial_sums",
    "s_enumerate",
    "s_formula",
    "table",
    "theorem1_rhs",
    "verify_closed_form",
    "verify_corollary_cs",
    "verify_lemma_a3",
    "verify_oracle",
    "verify_theorem1",
    "verify_theorem2",
]
