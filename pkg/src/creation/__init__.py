"""
Creation module - exports the creation operators and the Rodrigues driver.
"""

from src.creation.operators import (
    CreationVariant,
    IntegralityReport,
    apply_B,
    apply_B1,
    apply_B2,
    apply_B3,
    b2_inner_sum,
    d_statistic,
    explore_B3,
    integrality_check_monomial,
    rodrigues,
)

__all__ = [
    "CreationVariant",
    "IntegralityReport",
    "apply_B",
    "apply_B1",
    "apply_B2",
    "apply_B3",
    "b2_inner_sum",
    "d_statistic",
    "explore_B3",
    "integrality_check_monomial",
    "rodrigues",
]
