"""
Lattice Indices and Partitions

The transforms are indexed by m = (m_1, ..., m_{n-1}) with m_k >= 0.
Partitions are derived from m and never stored as primary data.
"""

from itertools import product
from math import prod
from typing import Iterable, Iterator, Optional, Sequence, Tuple

import numpy as np

from src.common.errors import DimensionError, DomainError

LatticeIndex = Tuple[int, ...]
Partition = Tuple[int, ...]


def as_index(m: Iterable[int], n: Optional[int] = None) -> LatticeIndex:
    """Normalize to an int tuple; check length n - 1 when n is given"""
    index = tuple(int(x) for x in m)
    if n is not None and len(index) != n - 1:
        raise DimensionError(
            f"Index {index} has length {len(index)}, expected {n - 1}",
            details={'n': n},
        )
    return index


def check_nonnegative(m: Sequence[int]) -> None:
    if any(x < 0 for x in m):
        raise DomainError(f"Lattice index entries must be >= 0, got {tuple(m)}")


def m_to_partition(m: Iterable[int]) -> Partition:
    """
    parts[j] = m_1 + ... + m_{n-1-j}, so parts = (|m|, ..., m_1, 0)

    Examples:
        m_to_partition((1, 0))     -> (1, 1, 0)
        m_to_partition((2, 1, 3))  -> (6, 3, 2, 0)
    """
    m = as_index(m)
    check_nonnegative(m)
    n = len(m) + 1
    return tuple(sum(m[:n - 1 - j]) for j in range(n))


def partition_to_m(parts: Iterable[int]) -> LatticeIndex:
    """Inverse of m_to_partition"""
    parts = tuple(int(x) for x in parts)
    n = len(parts)
    if n < 2:
        raise DimensionError("A partition needs at least two parts")
    if parts[-1] != 0 or any(parts[i] < parts[i + 1] for i in range(n - 1)):
        raise DomainError(f"Not a weakly decreasing partition ending in 0: {parts}")
    return tuple(parts[n - 1 - k] - parts[n - k] for k in range(1, n))


def partition_size(m: Iterable[int]) -> int:
    """|partition| = sum_k (n - k) m_k"""
    m = as_index(m)
    n = len(m) + 1
    return sum((n - k) * mk for k, mk in enumerate(m, start=1))


def schur_dimension(m: Iterable[int]) -> int:
    """Weyl dimension s_m(1, ..., 1) = prod_{i<j} (l_i - l_j + j - i) / (j - i)"""
    parts = m_to_partition(m)
    n = len(parts)
    numerator = prod(parts[i] - parts[j] + j - i for i in range(n) for j in range(i + 1, n))
    denominator = prod(j - i for i in range(n) for j in range(i + 1, n))
    return numerator // denominator


def cube_indices(n: int, side: int) -> Iterator[LatticeIndex]:
    """Every m with 0 <= m_k <= side, in lexicographic order"""
    return product(range(side + 1), repeat=n - 1)


def cube_array(n: int, side: int) -> np.ndarray:
    """cube_indices as a (B, n - 1) int array, same order"""
    axes = np.meshgrid(*([np.arange(side + 1)] * (n - 1)), indexing="ij")
    return np.stack([axis.reshape(-1) for axis in axes], axis=1).astype(np.int64)


def partitions_of(ms: np.ndarray) -> np.ndarray:
    """Row-wise m_to_partition for a (B, n - 1) array"""
    ms = np.asarray(ms, dtype=np.int64)
    prefix = np.concatenate([np.zeros((ms.shape[0], 1), dtype=np.int64), np.cumsum(ms, axis=1)], axis=1)
    return prefix[:, ::-1]


def weyl_dimensions(ms: np.ndarray) -> np.ndarray:
    """Row-wise schur_dimension as floats"""
    parts = partitions_of(ms).astype(float)
    n = parts.shape[1]
    dims = np.ones(parts.shape[0])
    for i in range(n):
        for j in range(i + 1, n):
            dims *= (parts[:, i] - parts[:, j] + j - i) / (j - i)
    return dims


__all__ = [
    'LatticeIndex',
    'Partition',
    'as_index',
    'check_nonnegative',
    'm_to_partition',
    'partition_to_m',
    'partition_size',
    'schur_dimension',
    'cube_indices',
    'cube_array',
    'partitions_of',
    'weyl_dimensions',
]
