"""
Schur Polynomial Evaluation

Three evaluators for s_m(alpha), where the partition of the lattice index
m is (m_1 + ... + m_{n-1}, ..., m_1, 0):

- schur_bialternant: ratio of alternants, rejected near coincident alpha
- schur_jacobi_trudi: det[h_{l_i - i + j}], always defined
- schur_laurent: the Jacobi-Trudi determinant over the torus alphabet,
  exact as a Laurent polynomial in beta_1, ..., beta_{n-1}

Batch helpers evaluate many indices at one alphabet (schur_batch) or one
index over many alphabets (schur_grid) with stacked determinants.

Part of: whittaker_lab - p-adic Whittaker transform toolkit
"""

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, List, Sequence, Union

import numpy as np

from configs.lab_settings import BIALTERNANT_MIN_SEPARATION, SCHUR_LAURENT_MAX_SIZE
from src.algebra.laurent import LaurentPoly, lp_constant, lp_monomial
from src.common.errors import ConditioningError, DimensionError, OracleTooLargeError, PoleError
from src.common.models import SpectralParams
from src.symmetric.partitions import as_index, check_nonnegative, m_to_partition, partitions_of

SpectralLike = Union[SpectralParams, Sequence[complex], np.ndarray]


def spectral_array(a: SpectralLike) -> np.ndarray:
    """Parameters as a 1-d complex array"""
    if isinstance(a, SpectralParams):
        return a.array
    arr = np.asarray(a, dtype=complex)
    if arr.ndim != 1 or arr.size < 2:
        raise DimensionError(f"Expected a vector of at least two parameters, got shape {arr.shape}")
    return arr


def _checked_partition(m: Iterable[int], n: int):
    index = as_index(m, n)
    check_nonnegative(index)
    return m_to_partition(index)


# ============================================================================
# Complete homogeneous polynomials
# ============================================================================

def complete_homogeneous(alpha: SpectralLike, kmax: int) -> np.ndarray:
    """
    h_0, ..., h_kmax of the alphabet

    Recurrence h_k^(j) = h_k^(j-1) + x_j * h_{k-1}^(j) over the letters.
    `alpha` may also be a (K, n) array; the result is then (K, kmax + 1).
    """
    alphas = np.asarray(alpha.array if isinstance(alpha, SpectralParams) else alpha, dtype=complex)
    h = np.zeros(alphas.shape[:-1] + (kmax + 1,), dtype=complex)
    h[..., 0] = 1.0
    for j in range(alphas.shape[-1]):
        x = alphas[..., j]
        for k in range(1, kmax + 1):
            h[..., k] += x * h[..., k - 1]
    return h


def _jacobi_trudi_indices(parts: np.ndarray, size: int) -> np.ndarray:
    """idx[b, i, j] = parts[b, i] - i + j"""
    offsets = np.arange(size)
    return parts[:, :size, None] - offsets[None, :, None] + offsets[None, None, :]


# ============================================================================
# Numeric evaluators
# ============================================================================

def schur_bialternant(m: Iterable[int], a: SpectralLike) -> complex:
    """
    det[alpha_i^(l_j + n - j)] / det[alpha_i^(n - j)]

    Raises:
        ConditioningError: two parameters closer than the separation threshold
    """
    alpha = spectral_array(a)
    n = alpha.size
    parts = _checked_partition(m, n)

    closest = min(abs(x - y) for x, y in combinations(alpha, 2))
    if closest <= BIALTERNANT_MIN_SEPARATION:
        raise ConditioningError(
            "Spectral parameters nearly coincide; use schur_jacobi_trudi",
            details={'min_separation': closest},
        )

    staircase = np.arange(n - 1, -1, -1)
    numerator = np.linalg.det(alpha[:, None] ** (np.asarray(parts)[None, :] + staircase[None, :]))
    denominator = np.linalg.det(alpha[:, None] ** staircase[None, :])
    return complex(numerator / denominator)


def schur_jacobi_trudi(m: Iterable[int], a: SpectralLike) -> complex:
    """Jacobi-Trudi determinant; defined for repeated parameters"""
    return complex(schur_batch([m], a)[0])


def schur_batch(ms: Sequence[Iterable[int]], a: SpectralLike) -> np.ndarray:
    """s_m(alpha) for every m in `ms` at a single alphabet"""
    alpha = spectral_array(a)
    n = alpha.size
    if len(ms) == 0:
        return np.zeros(0, dtype=complex)
    indices = np.asarray([tuple(m) for m in ms], dtype=np.int64).reshape(len(ms), -1)
    if indices.shape[1] != n - 1:
        raise DimensionError(f"Indices have length {indices.shape[1]}, expected {n - 1}")
    check_nonnegative(indices.reshape(-1).tolist())
    parts = partitions_of(indices)
    size = n - 1
    kmax = int(parts[:, 0].max()) + size - 1
    h = complete_homogeneous(alpha, kmax)
    idx = _jacobi_trudi_indices(parts, size)
    matrices = np.where(idx >= 0, h[np.clip(idx, 0, kmax)], 0.0)
    return np.linalg.det(matrices).astype(complex)


def schur_grid(m: Iterable[int], alphas: np.ndarray) -> np.ndarray:
    """s_m at every row of a (K, n) array of alphabets"""
    alphas = np.asarray(alphas, dtype=complex)
    if alphas.ndim != 2:
        raise DimensionError(f"Expected a (K, n) array, got shape {alphas.shape}")
    n = alphas.shape[1]
    parts = np.array([_checked_partition(m, n)], dtype=np.int64)
    size = n - 1
    kmax = int(parts[0, 0]) + size - 1
    h = complete_homogeneous(alphas, kmax)
    idx = _jacobi_trudi_indices(parts, size)[0]
    matrices = np.where(idx[None] >= 0, h[:, np.clip(idx, 0, kmax)], 0.0)
    return np.linalg.det(matrices).astype(complex)


def standard_lfactor(a: SpectralLike, p: int, s: complex) -> complex:
    """L(s) = prod_i (1 - alpha_i p^-s)^-1"""
    alpha = spectral_array(a)
    x = complex(p) ** (-complex(s))
    factors = 1.0 - alpha * x
    if np.any(np.abs(factors) == 0):
        raise PoleError("Euler factor vanishes", details={'p': p, 's': complex(s)})
    return complex(1.0 / np.prod(factors))


# ============================================================================
# Symbolic evaluator on the torus
# ============================================================================

def torus_alphabet(n: int, inverted: bool) -> List[LaurentPoly]:
    """(beta_1, ..., beta_{n-1}, 1/(beta_1...beta_{n-1})), entrywise inverted if requested"""
    sign = -1 if inverted else 1
    letters = []
    for i in range(n - 1):
        exponent = [0] * (n - 1)
        exponent[i] = sign
        letters.append(lp_monomial(exponent, n))
    letters.append(lp_monomial([-sign] * (n - 1), n))
    return letters


def _laurent_complete_homogeneous(letters: List[LaurentPoly], kmax: int) -> List[LaurentPoly]:
    rank = letters[0].rank
    zero = LaurentPoly({}, rank)
    h = [lp_constant(1.0, rank)] + [zero] * kmax
    for x in letters:
        for k in range(1, kmax + 1):
            h[k] = h[k] + x * h[k - 1]
    return h


def _permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i, j in combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def _laurent_det(matrix: List[List[LaurentPoly]], rank: int) -> LaurentPoly:
    size = len(matrix)
    total = LaurentPoly({}, rank)
    for perm in permutations(range(size)):
        entries = [matrix[i][perm[i]] for i in range(size)]
        if any(e.is_zero() for e in entries):
            continue
        term = entries[0]
        for e in entries[1:]:
            term = term * e
        total = total + term * _permutation_sign(perm)
    return total


@lru_cache(maxsize=2048)
def _schur_laurent_cached(parts: tuple, inverted: bool, n: int) -> LaurentPoly:
    size = n - 1
    kmax = parts[0] + size - 1
    h = _laurent_complete_homogeneous(torus_alphabet(n, inverted), kmax)
    zero = LaurentPoly({}, n)
    matrix = [[h[parts[i] - i + j] if parts[i] - i + j >= 0 else zero for j in range(size)]
              for i in range(size)]
    return _laurent_det(matrix, n)


def schur_laurent(m: Iterable[int], inverted: bool, n: int) -> LaurentPoly:
    """
    s_m(beta) or s_m(1/beta) as a Laurent polynomial in beta_1, ..., beta_{n-1}

    Raises:
        OracleTooLargeError: partition size above the support guard
    """
    parts = _checked_partition(m, n)
    size = sum(parts)
    if size > SCHUR_LAURENT_MAX_SIZE:
        raise OracleTooLargeError(
            f"Partition size {size} exceeds the Laurent guard {SCHUR_LAURENT_MAX_SIZE}",
            details={'m': list(as_index(m))},
        )
    return _schur_laurent_cached(parts, bool(inverted), n)


__all__ = [
    'SpectralLike',
    'spectral_array',
    'complete_homogeneous',
    'schur_bialternant',
    'schur_jacobi_trudi',
    'schur_batch',
    'schur_grid',
    'standard_lfactor',
    'torus_alphabet',
    'schur_laurent',
]
