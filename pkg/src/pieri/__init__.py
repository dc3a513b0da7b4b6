"""
Pieri module - exports the Pieri rule and the (q,t)-Kostka matrices.
"""

from src.pieri.kostka import KostkaMatrix, dual_schur_St, kostka_matrix
from src.pieri.linalg import SingularMatrixError, bareiss_solve
from src.pieri.pieri import (
    PieriExpansion,
    leading_column_structure,
    pieri_coefficient,
    pieri_expand,
    pieri_oracle,
    vertical_strips,
)

__all__ = [
    "KostkaMatrix",
    "dual_schur_St",
    "kostka_matrix",
    "SingularMatrixError",
    "bareiss_solve",
    "PieriExpansion",
    "leading_column_structure",
    "pieri_coefficient",
    "pieri_expand",
    "pieri_oracle",
    "vertical_strips",
]
