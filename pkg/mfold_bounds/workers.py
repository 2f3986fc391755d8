"""
mfold_bounds.workers - Ordered fan-out of pure evaluations
"""

# stdlib
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

# module
from mfold_bounds import app_config

T = TypeVar("T")
R = TypeVar("R")


def fan_out(func: Callable[[T], R], items: Iterable[T], workers: int = None) -> list[R]:
    """Maps func over items, keeping input order whatever the worker count"""
    items = list(items)
    workers = app_config.WORKERS if workers is None else workers
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(workers, len(items))) as executor:
        return list(executor.map(func, items))
