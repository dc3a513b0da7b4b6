"""
Bounded worker pool for independent sub-computations.

Results are always returned in input order, so sums reduced from them are
identical whatever the thread count.
"""

import threading
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

A = TypeVar("A")
R = TypeVar("R")

_lock = threading.Lock()
_threads = 1


def configure_threads(count: int) -> None:
    """Set the worker count used by ordered_map (1 disables the pool)."""
    global _threads
    if count < 1:
        raise ValueError(f"thread count must be at least 1, got {count}")
    with _lock:
        _threads = count


def get_threads() -> int:
    with _lock:
        return _threads


def ordered_map(fn: Callable[[A], R], items: Iterable[A]) -> list[R]:
    """map() over items, in parallel when more than one thread is configured."""
    items = list(items)
    workers = min(get_threads(), len(items))
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
