"""
Process-wide memo tables.

Every memoized helper in the package registers here, so one call to
``clear_caches`` drops all of them (long sessions, benchmarks, tests).
"""

import threading
from functools import lru_cache
from typing import Callable, TypeVar

F = TypeVar("F", bound=Callable)

_registry_lock = threading.Lock()
_clearers: list[Callable[[], None]] = []


def register_clearer(clear: Callable[[], None]) -> None:
    """Register a callable that empties one memo table."""
    with _registry_lock:
        _clearers.append(clear)


def memoized(fn: F) -> F:
    """Unbounded ``lru_cache`` that ``clear_caches`` knows about."""
    cached = lru_cache(maxsize=None)(fn)
    register_clearer(cached.cache_clear)
    return cached


def clear_caches() -> None:
    """Drop every registered memo table."""
    with _registry_lock:
        clearers = list(_clearers)
    for clear in clearers:
        clear()
