"""
mackit - exact Macdonald polynomials from creation operators - package initialization
"""

__version__ = "1.0.0"
__description__ = "Rodrigues formulas, Hecke-algebra identities and (q,t)-Kostka integrality in exact arithmetic"
