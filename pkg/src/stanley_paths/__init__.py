"""Exact enumeration of Dyck-path prefixes with odd returns to the x-axis.

The package computes the same integer sequences by three independent routes
(closed-form generating functions, explicit coefficient formulas, and a
state-graph dynamic program backed by exhaustive enumeration) and contains
the machinery to cross-verify them coefficient by coefficient.
"""

from .oracle import (
    DEFAULT_EXHAUSTIVE_CAPS,
    DOWN,
    RED,
    UP,
    Automaton,
    EnumerationResult,
    LimitExceededError,
    State,
    StateCountTable,
    ValidationResult,
    automaton,
    dp_counts,
    enumerate_words,
    parse_word,
    validate_word,
)
from .series import (
    DomainError,
    NonUnitDivisorError,
    NotDivisibleError,
    OrderMismatchError,
    TruncatedSeries,
    coefficient_at,
    constant,
    div,
    linear_combine,
    mul,
    one,
    polynomial,
    pow_int,
    shift,
    sqrt,
    zero,
)
from .skew import (
    SkewBoundary,
    SkewLevelGF,
    boundary_skew,
    even_part,
    level_gf_skew,
    r2_pow_coeff_skew,
    r2_skew,
    sum_level_slices_skew,
    total_prefix_skew,
    trinomial,
    v_series,
)
from .standard import (
    StdBoundary,
    StdLevelGF,
    boundary_std,
    level_gf_std,
    r2_pow_coeff_std,
    r2_std,
    sum_level_slices_std,
    total_prefix_std,
)

__version__ = "0.1.0"

__all__ = [
    "Automaton",
    "DEFAULT_EXHAUSTIVE_CAPS",
    "DOWN",
    "DomainError",
    "EnumerationResult",
    "LimitExceededError",
    "NonUnitDivisorError",
    "NotDivisibleError",
    "OrderMismatchError",
    "RED",
    "SkewBoundary",
    "SkewLevelGF",
    "State",
    "StateCountTable",
    "StdBoundary",
    "StdLevelGF",
    "TruncatedSeries",
    "UP",
    "ValidationResult",
    "automaton",
    "boundary_skew",
    "boundary_std",
    "coefficient_at",
    "constant",
    "div",
    "dp_counts",
    "enumerate_words",
    "even_part",
    "level_gf_skew",
    "level_gf_std",
    "linear_combine",
    "mul",
    "one",
    "parse_word",
    "polynomial",
    "pow_int",
    "r2_pow_coeff_skew",
    "r2_pow_coeff_std",
    "r2_skew",
    "r2_std",
    "shift",
    "sqrt",
    "sum_level_slices_skew",
    "sum_level_slices_std",
    "total_prefix_skew",
    "total_prefix_std",
    "trinomial",
    "v_series",
    "validate_word",
    "zero",
]
