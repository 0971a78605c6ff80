"""
Trapezoid Rule on the Unit Torus

The N-point rule on |beta| = 1 integrates beta^k exactly unless N divides
k != 0, so a Laurent polynomial whose exponent spread stays below N on
every axis is integrated without error.
"""

from typing import Callable, Iterator

import numpy as np

from src.common.parallel import tree_sum

_CHUNK = 65_536


def circle_nodes(N: int) -> np.ndarray:
    """exp(2 pi i k / N), k = 0..N-1"""
    return np.exp(2j * np.pi * np.arange(N) / N)


def iter_torus_nodes(N: int, nvars: int, chunk: int = _CHUNK) -> Iterator[np.ndarray]:
    """Tensor grid of circle nodes in (<=chunk, nvars) blocks, lexicographic order"""
    roots = circle_nodes(N)
    total = N ** nvars
    shape = (N,) * nvars
    for start in range(0, total, chunk):
        flat = np.arange(start, min(total, start + chunk))
        axes = np.unravel_index(flat, shape)
        yield np.stack([roots[axis] for axis in axes], axis=1)


def torus_nodes(N: int, nvars: int) -> np.ndarray:
    return np.concatenate(list(iter_torus_nodes(N, nvars)), axis=0)


def torus_mean(integrand: Callable[[np.ndarray], np.ndarray], N: int, nvars: int) -> complex:
    """Average of a vectorized integrand over the N^nvars grid"""
    values = [np.asarray(integrand(block), dtype=complex) for block in iter_torus_nodes(N, nvars)]
    return tree_sum(np.concatenate(values)) / float(N ** nvars)


__all__ = [
    'circle_nodes',
    'iter_torus_nodes',
    'torus_nodes',
    'torus_mean',
]
