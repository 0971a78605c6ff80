"""
Worker Pool and Deterministic Reduction

Independent table rows, verify trials and lattice-sum chunks may run on a
thread pool capped by WHITTAKER_LAB_THREADS. Results always come back in
submission order and every accumulation goes through numpy's pairwise
summation, so outputs do not depend on the thread count.
"""

from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, TypeVar

import numpy as np

from src.common.models import load_settings

T = TypeVar("T")
R = TypeVar("R")


@contextmanager
def worker_pool(threads: Optional[int] = None) -> Iterator[ThreadPoolExecutor]:
    """Thread pool sized from the settings unless overridden"""
    size = threads if threads is not None else load_settings().threads
    with ThreadPoolExecutor(max_workers=max(1, size)) as pool:
        yield pool


def ordered_map(fn: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> List[R]:
    """Map fn over items on the pool; results keep the input order"""
    items = list(items)
    size = threads if threads is not None else load_settings().threads
    if size <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with worker_pool(size) as pool:
        return list(pool.map(fn, items))


def spawn_generators(seed: int, count: int) -> List[np.random.Generator]:
    """One independent generator per trial, split from a single seed"""
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.default_rng(child) for child in children]


def tree_sum(values: Sequence[complex]) -> complex:
    """Pairwise (tree) summation of complex terms"""
    arr = np.asarray(values, dtype=complex)
    if arr.size == 0:
        return 0j
    return complex(np.sum(arr))


__all__ = [
    'worker_pool',
    'ordered_map',
    'spawn_generators',
    'tree_sum',
]
