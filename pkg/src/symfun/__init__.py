"""
Symmetric function module - exports partitions, classical bases and conversions.
"""

from src.symfun.partitions import (
    Partition,
    arm_leg,
    b_lambda_cell,
    c_lambda,
    dominance_leq,
    partitions_of,
    z_lambda,
)
from src.symfun.bases import (
    Basis,
    SymExpansion,
    elementary,
    expand_basis,
    monomial_symmetric,
    scalar_product_qt,
    to_basis,
)

__all__ = [
    "Partition",
    "arm_leg",
    "b_lambda_cell",
    "c_lambda",
    "dominance_leq",
    "partitions_of",
    "z_lambda",
    "Basis",
    "SymExpansion",
    "elementary",
    "expand_basis",
    "monomial_symmetric",
    "scalar_product_qt",
    "to_basis",
]
