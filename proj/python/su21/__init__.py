"""Weight denominators of arithmetic subgroups of SU(2,1) over the Eisenstein integers."""

from ._core import (
    DomainError,
    IndexOverflow,
    InvalidParameters,
    ParseError,
    Su21Error,
    decompose,
    generators,
    multiplier_system_exists,
    sigma,
    survey_index3,
    verify_presentation,
    weight_denominator,
)

__all__ = [
    "DomainError",
    "IndexOverflow",
    "InvalidParameters",
    "ParseError",
    "Su21Error",
    "decompose",
    "generators",
    "multiplier_system_exists",
    "sigma",
    "survey_index3",
    "verify_presentation",
    "weight_denominator",
]
