"""
Macdonald module - exports the q-difference operators and the Gram-Schmidt oracle.
"""

from src.macdonald.operators import (
    ATilde,
    A_tilde,
    apply_macdonald_genfun,
    apply_macdonald_r,
    eigenvalue_a,
)
from src.macdonald.oracle import (
    expand_macdonald,
    gram_schmidt_J,
    macdonald_J,
    macdonald_P,
    macdonald_poly,
    monic_P,
    to_macdonald_basis,
)

__all__ = [
    "ATilde",
    "A_tilde",
    "apply_macdonald_genfun",
    "apply_macdonald_r",
    "eigenvalue_a",
    "expand_macdonald",
    "gram_schmidt_J",
    "macdonald_J",
    "macdonald_P",
    "macdonald_poly",
    "monic_P",
    "to_macdonald_basis",
]
