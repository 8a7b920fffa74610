"""Python bindings for the divisible C++ library."""

from ._divisible import (
    BudgetExceeded,
    DivisibleError,
    Graph,
    NotInClassError,
    ParseError,
    TheoremViolation,
    chromatic_number,
    classify,
    clique_number,
    color_via_perfect_division,
    color_via_two_division,
    find_homogeneous_set,
    is_perfect,
    is_two_divisible,
    perfect_divide,
    two_divide,
    verify_perfect_division,
    verify_two_division,
)

__all__ = [
    "BudgetExceeded",
    "DivisibleError",
    "Graph",
    "NotInClassError",
    "ParseError",
    "TheoremViolation",
    "chromatic_number",
    "classify",
    "clique_number",
    "color_via_perfect_division",
    "color_via_two_division",
    "find_homogeneous_set",
    "is_perfect",
    "is_two_divisible",
    "perfect_divide",
    "two_divide",
    "verify_perfect_division",
    "verify_two_division",
]
