"""
Command, method and output-format definitions for the CLI.
"""

from enum import Enum, auto


class Command(Enum):
    """Subcommands of the mackit CLI."""

    JPOLY = auto()
    VERIFY = auto()
    KOSTKA = auto()
    PIERI = auto()

    @classmethod
    def parse(cls, name: str) -> "Command":
        try:
            return cls[name.upper()]
        except KeyError:
            raise ValueError(f"unknown command {name!r}") from None


class Method(Enum):
    """How jpoly builds J_lam: a creation-operator variant or the oracle."""

    B1 = "b1"
    B2 = "b2"
    B3 = "b3"
    ORACLE = "oracle"

    @classmethod
    def parse(cls, tag: str) -> "Method":
        for member in cls:
            if member.value == tag:
                return member
        raise ValueError(f"unknown method {tag!r}; expected one of {[m.value for m in cls]}")


class OutputFormat(Enum):
    """Serialization of command results on stdout."""

    JSON = "json"
    TEXT = "text"

    @classmethod
    def parse(cls, tag: str) -> "OutputFormat":
        for member in cls:
            if member.value == tag:
                return member
        raise ValueError(f"unknown output format {tag!r}")
