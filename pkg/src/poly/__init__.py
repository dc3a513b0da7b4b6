"""
Polynomial module - sparse polynomials in x_1..x_N and their primitive motions.
"""

from src.poly.mpoly import (
    Composition,
    InexactDivisionError,
    MPoly,
    apply_shift,
    apply_transposition,
    as_mpoly,
    exact_divide,
    exact_divide_linear,
    is_symmetric,
    transform_monomials,
)
from src.poly.series import ParamPolyResult

__all__ = [
    "Composition",
    "InexactDivisionError",
    "MPoly",
    "ParamPolyResult",
    "apply_shift",
    "apply_transposition",
    "as_mpoly",
    "exact_divide",
    "exact_divide_linear",
    "is_symmetric",
    "transform_monomials",
]
