"""
Hecke module - exports the affine Hecke algebra operators on polynomials.
"""

from src.hecke.operators import (
    HeckeContext,
    IndexSet,
    apply_omega,
    apply_s0,
    apply_T,
    apply_T0,
    apply_T_inv,
    apply_Y,
    apply_YJu,
    apply_YJu_as_u_series,
    compositions,
    omega_by_composition,
    s0_by_composition,
)

__all__ = [
    "HeckeContext",
    "IndexSet",
    "apply_omega",
    "apply_s0",
    "apply_T",
    "apply_T0",
    "apply_T_inv",
    "apply_Y",
    "apply_YJu",
    "apply_YJu_as_u_series",
    "compositions",
    "omega_by_composition",
    "s0_by_composition",
]
