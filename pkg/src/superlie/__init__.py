"""Exact Schur multipliers and stem covers of finite dimensional Lie superalgebras over Q."""
from .algebra_io import AlgebraParseError, AlgebraValidationError, emit_algebra, parse_algebra
from .catalog import CatalogEntry, UnknownAlgebraError, algebra_from_key, all_entries, named
from .multiplier import (
    MultiplierResult,
    StemCover,
    multiplier_dim,
    s_invariant,
    stem_cover,
    t_invariant,
)
from .superalg import (
    AlgebraFormatError,
    GradedDim,
    LieSuperAlgebra,
    Parity,
    Subspace,
    center,
    derived_subalgebra,
    direct_sum,
    lower_central_series,
    quotient,
    upper_central_series,
    validate,
)

__all__ = [
    "AlgebraFormatError", "AlgebraParseError", "AlgebraValidationError", "CatalogEntry", "GradedDim", "LieSuperAlgebra",
    "MultiplierResult", "Parity", "StemCover", "Subspace", "UnknownAlgebraError",
    "algebra_from_key", "all_entries", "center", "derived_subalgebra", "direct_sum",
    "emit_algebra", "lower_central_series", "multiplier_dim", "named", "parse_algebra",
    "quotient", "s_invariant", "stem_cover", "t_invariant", "upper_central_series", "validate",
]
