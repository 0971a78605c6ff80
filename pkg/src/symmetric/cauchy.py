"""
Cauchy Identities

    sum_m s_m(alpha) s_m(beta) = (1 - prod alpha prod beta) / prod_{i,j} (1 - alpha_i beta_j)

and the Cauchy determinant
    det[1 / (1 - alpha_i beta_j)] = prod_{i<j} (alpha_i - alpha_j)(beta_i - beta_j) / prod_{i,j} (1 - alpha_i beta_j)
"""

from typing import Tuple

import numpy as np

from configs.lab_settings import DEFAULT_TRUNCATION
from src.common.errors import DimensionError, DomainError, PoleError
from src.common.parallel import tree_sum
from src.common.series import TruncatedSum, cauchy_log_coefficient, roundoff_bound, shell_tail
from src.symmetric.partitions import cube_array, partitions_of, weyl_dimensions
from src.symmetric.schur import SpectralLike, schur_batch, spectral_array


def _pair(a: SpectralLike, b: SpectralLike) -> Tuple[np.ndarray, np.ndarray]:
    alpha, beta = spectral_array(a), spectral_array(b)
    if alpha.size != beta.size:
        raise DimensionError(
            f"Parameter vectors differ in length: {alpha.size} vs {beta.size}",
            details={'n_alpha': alpha.size, 'n_beta': beta.size},
        )
    return alpha, beta


def _require_inside(alpha: np.ndarray, beta: np.ndarray) -> float:
    q = float(np.max(np.abs(np.outer(alpha, beta))))
    if q >= 1.0:
        raise DomainError(
            f"Cauchy series diverges: max |alpha_i beta_j| = {q:.6g} >= 1",
            details={'q': q},
        )
    return q


def cauchy_rhs(a: SpectralLike, b: SpectralLike) -> complex:
    """Closed form of the Cauchy kernel"""
    alpha, beta = _pair(a, b)
    _require_inside(alpha, beta)
    numerator = 1.0 - np.prod(alpha) * np.prod(beta)
    return complex(numerator / np.prod(1.0 - np.outer(alpha, beta)))


def cauchy_lhs_truncated(a: SpectralLike, b: SpectralLike, M: int = DEFAULT_TRUNCATION) -> TruncatedSum:
    """
    Partial Cauchy sum over 0 <= m_k <= M

    The tail bound majorizes |s_m(alpha) s_m(beta)| by dim(m)^2 q^|m|
    with q = max|alpha| * max|beta|.
    """
    alpha, beta = _pair(a, b)
    q = _require_inside(alpha, beta)
    n = alpha.size

    ms = cube_array(n, M)
    terms = schur_batch(ms, alpha) * schur_batch(ms, beta)
    sizes = partitions_of(ms).sum(axis=1)
    majorants = weyl_dimensions(ms) ** 2 * q ** sizes

    return TruncatedSum(
        value=tree_sum(terms),
        truncation_bound=shell_tail(cauchy_log_coefficient(n), q, M + 1),
        roundoff_bound=roundoff_bound(np.abs(terms), majorants),
        truncation=M,
        terms=len(ms),
    )


def cauchy_determinant_check(a: SpectralLike, b: SpectralLike) -> Tuple[complex, complex]:
    """(det[1/(1 - alpha_i beta_j)], Vandermonde(alpha) Vandermonde(beta) / prod (1 - alpha_i beta_j))"""
    alpha, beta = _pair(a, b)
    gaps = 1.0 - np.outer(alpha, beta)
    if np.any(gaps == 0):
        raise PoleError("Some 1 - alpha_i beta_j vanishes")

    determinant = np.linalg.det(1.0 / gaps)
    n = alpha.size
    vandermonde = np.prod([(alpha[i] - alpha[j]) * (beta[i] - beta[j])
                           for i in range(n) for j in range(i + 1, n)])
    return complex(determinant), complex(vandermonde / np.prod(gaps))


__all__ = [
    'cauchy_rhs',
    'cauchy_lhs_truncated',
    'cauchy_determinant_check',
]
