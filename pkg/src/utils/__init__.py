"""
Utility module - exports common utilities.
"""

from src.utils.logger import Logger, LogLevel
from src.utils.commands import Command, Method, OutputFormat
from src.utils.parallel import configure_threads, get_threads, ordered_map
from src.utils.cache import clear_caches, memoized

__all__ = [
    "Logger",
    "LogLevel",
    "Command",
    "Method",
    "OutputFormat",
    "configure_threads",
    "get_threads",
    "ordered_map",
    "clear_caches",
    "memoized",
]
