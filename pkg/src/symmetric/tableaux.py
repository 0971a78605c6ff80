"""
Semistandard Tableau Oracle

Brute-force s_m(alpha) as the sum of alpha^content over all semistandard
Young tableaux of shape m_to_partition(m) with entries 1..n. Ground truth
for the determinant evaluators, guarded against combinatorial blow-up.
"""

from collections import Counter
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple

import numpy as np

from configs.lab_settings import TABLEAU_MAX_RANK, TABLEAU_MAX_SIZE
from src.common.errors import OracleTooLargeError
from src.symmetric.partitions import as_index, check_nonnegative, m_to_partition
from src.symmetric.schur import SpectralLike, spectral_array


def _is_valid(tableau: List[List[int]], row: int, col: int, val: int) -> bool:
    """Rows weakly increase, columns strictly increase"""
    if col > 0 and val < tableau[row][col - 1]:
        return False
    if row > 0 and val <= tableau[row - 1][col]:
        return False
    return True


def tableau_contents(shape: Tuple[int, ...], n: int) -> Dict[Tuple[int, ...], int]:
    """
    Count SSYT of `shape` by content vector

    Returns:
        content (multiplicity of each entry 1..n) -> number of tableaux
    """
    return dict(_sorted_contents(tuple(part for part in shape if part > 0), n))


@lru_cache(maxsize=1024)
def _sorted_contents(shape: Tuple[int, ...], n: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    tableau = [[0] * length for length in shape]
    counts: Counter = Counter()
    content = [0] * n

    def backtrack(pos: int) -> None:
        if pos == len(cells):
            counts[tuple(content)] += 1
            return
        row, col = cells[pos]
        # column strictness bounds the smallest admissible entry below by row index
        for val in range(row + 1, n + 1):
            if not _is_valid(tableau, row, col, val):
                continue
            tableau[row][col] = val
            content[val - 1] += 1
            backtrack(pos + 1)
            content[val - 1] -= 1
            tableau[row][col] = 0

    backtrack(0)
    return tuple(sorted(counts.items()))


def schur_tableau_oracle(m: Iterable[int], a: SpectralLike) -> complex:
    """
    Monomial sum over semistandard tableaux

    Raises:
        OracleTooLargeError: partition size above 12 or rank above 5
    """
    alpha = spectral_array(a)
    n = alpha.size
    index = as_index(m, n)
    check_nonnegative(index)
    parts = m_to_partition(index)
    size = sum(parts)
    if size > TABLEAU_MAX_SIZE or n > TABLEAU_MAX_RANK:
        raise OracleTooLargeError(
            f"Tableau oracle limited to |partition| <= {TABLEAU_MAX_SIZE} and n <= {TABLEAU_MAX_RANK}",
            details={'size': size, 'n': n},
        )

    contents = _sorted_contents(tuple(part for part in parts if part > 0), n)
    terms = [count * complex(np.prod(alpha ** np.asarray(c))) for c, count in contents]
    return complex(np.sum(np.asarray(terms, dtype=complex)))


__all__ = [
    'tableau_contents',
    'schur_tableau_oracle',
]
