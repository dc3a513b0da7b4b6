"""
Logger utility for clean, non-noisy logging.

Everything goes to stderr; stdout carries command results only.
"""

import sys
import time
from contextlib import contextmanager
from datetime import datetime
from enum import Enum
from typing import Iterator, Optional, TextIO


class LogLevel(Enum):
    """Log levels."""
    DEBUG = 0
    INFO = 1
    WARNING = 2
    ERROR = 3


class Logger:
    """Category logger with optional step timing."""

    def __init__(self, name: str, verbose: bool = False, stream: Optional[TextIO] = None):
        self.name = name
        self.verbose = verbose
        self.min_level = LogLevel.DEBUG if verbose else LogLevel.INFO
        self._stream = stream

    def _format_message(self, level: LogLevel, category: str, message: str) -> str:
        """Format a log message with timestamp and level."""
        timestamp = datetime.now().strftime("%H:%M:%S.%f")[:-3]
        level_str = level.name.upper()
        return f"[{timestamp}] [{level_str}] [{self.name}:{category}] {message}"

    def _emit(self, level: LogLevel, category: str, message: str) -> None:
        if self.min_level.value <= level.value:
            # sys.stderr looked up per call
            print(self._format_message(level, category, message), file=self._stream or sys.stderr)

    def debug(self, category: str, message: str) -> None:
        """Log a debug message."""
        self._emit(LogLevel.DEBUG, category, message)

    def info(self, category: str, message: str) -> None:
        """Log an info message."""
        self._emit(LogLevel.INFO, category, message)

    def warning(self, category: str, message: str) -> None:
        """Log a warning message."""
        self._emit(LogLevel.WARNING, category, message)

    def error(self, category: str, message: str) -> None:
        """Log an error message."""
        self._emit(LogLevel.ERROR, category, message)

    @contextmanager
    def timed(self, category: str, label: str) -> Iterator[None]:
        """
        Log the wall time of the enclosed block at debug level.

        Args:
            category: Message category for grouping
            label: What the block computes, e.g. "kostka n=4"
        """
        start = time.perf_counter()
        try:
            yield
        finally:
            self.debug(category, f"{label} took {time.perf_counter() - start:.3f}s")
