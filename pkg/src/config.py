"""
Configuration and constants for the mackit command line.
"""

import os
from dataclasses import dataclass, field
from typing import Optional

from src.symfun.partitions import Partition
from src.utils.commands import Command, Method, OutputFormat

# Environment variable overriding SuiteBounds.max_degree
MAX_DEGREE_ENV = "MACKIT_MAX_DEGREE"


@dataclass
class SuiteBounds:
    """Bounds for the exact-identity verification suites."""

    # Number of variables the operators act on
    nvars: int = 3

    # Operators preserve degree; identities are certified on all monomials
    # up to this total degree
    max_degree: int = 4

    # Seed for the randomized symmetric samples
    seed: int = 0


@dataclass
class OutputConfig:
    """Configuration for result rendering."""

    format: OutputFormat = OutputFormat.TEXT


@dataclass
class RunConfig:
    """One CLI invocation, already validated."""

    command: Command
    partition: Partition = field(default_factory=Partition)
    nvars: int = 1
    method: Method = Method.B3
    max_degree: int = 4
    format: OutputFormat = OutputFormat.TEXT
    seed: int = 0
    suite: Optional[str] = None
    degree: int = 0
    k: int = 1
    monic: bool = False
    explore: bool = False
    allow_large: bool = False
    threads: int = 1


@dataclass
class AppConfig:
    """Main application configuration."""

    bounds: SuiteBounds
    output: OutputConfig

    # Worker threads for subset sums and Kostka rows
    threads: int = 1

    # Verbose logging
    verbose: bool = False

    # kostka refuses larger degrees unless --allow-large is given
    max_kostka_degree: int = 6


def apply_env_overrides(bounds: SuiteBounds, environ: Optional[dict] = None) -> SuiteBounds:
    """
    Apply MACKIT_MAX_DEGREE to the suite bounds.

    Raises:
        ValueError: If the variable is set to something other than a
            non-negative integer
    """
    environ = os.environ if environ is None else environ
    raw = environ.get(MAX_DEGREE_ENV)
    if raw is None or raw == "":
        return bounds
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_DEGREE_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError(f"{MAX_DEGREE_ENV} must be non-negative, got {value}")
    bounds.max_degree = value
    return bounds


def get_default_config(
    verbose: bool = False,
    threads: int = 1,
    environ: Optional[dict] = None,
) -> AppConfig:
    """
    Get the default application configuration.

    Args:
        verbose: Whether to enable verbose logging
        threads: Worker thread count
        environ: Environment mapping (defaults to os.environ)

    Returns:
        AppConfig with sensible defaults
    """
    return AppConfig(
        bounds=apply_env_overrides(SuiteBounds(), environ),
        output=OutputConfig(),
        threads=threads,
        verbose=verbose,
    )
