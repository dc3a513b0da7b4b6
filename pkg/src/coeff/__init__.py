"""
Coefficient field module - exact arithmetic in ZZ[q,t] and Q(q,t).
"""

from src.coeff.intpoly import IntPolyQT, QT_RING
from src.coeff.ratqt import ONE, Q, T, ZERO, RatQT
from src.coeff.qseries import elementary_symmetric, pochhammer, qbinom

__all__ = [
    "IntPolyQT",
    "QT_RING",
    "RatQT",
    "ZERO",
    "ONE",
    "Q",
    "T",
    "pochhammer",
    "qbinom",
    "elementary_symmetric",
]
