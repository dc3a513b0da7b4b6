"""
Methods module - exports J_lam construction backends.
"""

from src.methods.backend import JPolyMethod, OracleMethod, RodriguesMethod, create_method

__all__ = ["JPolyMethod", "OracleMethod", "RodriguesMethod", "create_method"]
