"""
Construction backends for J_lam: the Gram-Schmidt oracle and the three
Rodrigues variants.
"""

from abc import ABC, abstractmethod

from src.creation.operators import CreationVariant, rodrigues
from src.macdonald.oracle import macdonald_poly
from src.poly.mpoly import MPoly
from src.symfun.partitions import Partition
from src.utils.commands import Method
from src.utils.logger import Logger


class JPolyMethod(ABC):
    """Abstract base class for J_lam constructions."""

    @abstractmethod
    def build(self, lam: Partition, nvars: int) -> MPoly:
        """
        Build J_lam in nvars variables.

        Args:
            lam: Partition with at most nvars parts
            nvars: Number of variables
        """
        pass

    @property
    @abstractmethod
    def label(self) -> str:
        """Short name used in logs and output."""
        pass


class OracleMethod(JPolyMethod):
    """J_lam from orthogonality and triangularity."""

    def __init__(self, logger: Logger):
        self.logger = logger

    @property
    def label(self) -> str:
        return Method.ORACLE.value

    def build(self, lam: Partition, nvars: int) -> MPoly:
        self.logger.debug("method", f"oracle J_{lam} in {nvars} variables")
        return macdonald_poly(lam, nvars)


class RodriguesMethod(JPolyMethod):
    """J_lam by applying creation operators of one variant to 1."""

    def __init__(self, variant: CreationVariant, logger: Logger):
        self.variant = variant
        self.logger = logger

    @property
    def label(self) -> str:
        return self.variant.value

    def build(self, lam: Partition, nvars: int) -> MPoly:
        self.logger.debug("method", f"Rodrigues {self.variant.name} for J_{lam} in {nvars} variables")
        return rodrigues(lam, nvars, self.variant, self.logger)


def create_method(method: Method, logger: Logger) -> JPolyMethod:
    """Backend for a --via value."""
    if method == Method.ORACLE:
        return OracleMethod(logger)
    return RodriguesMethod(CreationVariant(method.value), logger)
