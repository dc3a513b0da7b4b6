"""
Verification module - exports the exact-identity suites.
"""

from src.verify.suites import SUITES, IdentityResult, SuiteReport, run_suite

__all__ = ["SUITES", "IdentityResult", "SuiteReport", "run_suite"]
