"""Fox coloring groups and Alexander-Burau-Fox modules of braid closures."""

from ._foxabf import (
    BraidWord,
    ConsistencyError,
    DomainError,
    ParseError,
    abf_module,
    alexander_polynomial,
    brute_force_coloring_count,
    coloring_group,
    cross_verify,
    fib,
    fox_closed_form,
    identity_suite,
    lucas,
    parse_braid,
    run_cli,
    wheel_braid,
    wheel_module,
)

__all__ = [
    "BraidWord",
    "ConsistencyError",
    "DomainError",
    "ParseError",
    "abf_module",
    "alexander_polynomial",
    "brute_force_coloring_count",
    "coloring_group",
    "cross_verify",
    "fib",
    "fox_closed_form",
    "identity_suite",
    "lucas",
    "parse_braid",
    "run_cli",
    "wheel_braid",
    "wheel_module",
]

__version__ = "0.1.0"
