"""
Symmetric-Power Local L-Factors

    L_p(s, Sym^d) = prod_{i=0}^{d} (1 - alpha^(d-2i) p^-s)^-1

for a GL(2) Satake parameter (alpha, 1/alpha), the matching torus
evaluator h_{s,p,d}(beta), and the unit-circle trapezoid rule used by the
numerical inverse transform.

Part of: whittaker_lab - p-adic Whittaker transform toolkit
"""

import cmath
import math
from typing import Callable, List

import numpy as np

from configs.lab_settings import POLE_CLEARANCE
from src.common.errors import ConditioningError, ContextError, DomainError, PoleError
from src.common.models import LFactorQuery, PrimeContext, is_prime
from src.common.parallel import tree_sum
from src.transform.functions import SpectralFunction
from src.transform.quadrature import circle_nodes

_POLE_GUARD = 1e-14


def sym_exponents(d: int) -> List[int]:
    """d, d-2, ..., -d"""
    return [d - 2 * i for i in range(d + 1)]


def x_power(s: complex, p: int, exponent: float) -> complex:
    """p^(-s * exponent); equal exponents give bitwise equal results"""
    return cmath.exp(-complex(s) * exponent * math.log(p))


def check_local_query(d: int, p: int, s: complex) -> None:
    """Shared preconditions of the L-factor routines"""
    if d < 1:
        raise DomainError(f"Symmetric-power degree must be >= 1, got {d}")
    if not is_prime(p):
        raise ContextError(f"p must be prime, got {p}")
    if complex(s).real <= 0:
        raise DomainError(f"Re(s) must be positive, got {s}")


def local_lfactor(q: LFactorQuery) -> complex:
    """
    Euler factor of Sym^d at p

    Examples:
        d=1, alpha=1, p=2, s=1  -> 4
        d=2, alpha=1, p=2, s=1  -> 8
    """
    x = x_power(q.s, q.p, 1.0)
    factors = np.array([1.0 - complex(q.alpha) ** e * x for e in sym_exponents(q.d)], dtype=complex)
    if np.any(np.abs(factors) <= _POLE_GUARD):
        raise PoleError(
            "Some alpha^(d-2i) equals p^s",
            details={'d': q.d, 'alpha': q.alpha, 'p': q.p, 's': q.s},
        )
    return complex(1.0 / np.prod(factors))


def lfactor_values(d: int, s: complex, p: int, beta: np.ndarray) -> np.ndarray:
    """h_{s,p,d}(beta) = prod_i (1 - beta^(d-2i) p^-s)^-1, vectorized"""
    beta = np.asarray(beta, dtype=complex)
    x = x_power(s, p, 1.0)
    result = np.ones(beta.shape, dtype=complex)
    for e in sym_exponents(d):
        result = result / (1.0 - beta ** e * x)
    return result


def pole_radii(d: int, s: complex, p: int) -> List[float]:
    """Moduli of the poles of h_{s,p,d} in beta"""
    rate = complex(s).real * math.log(p)
    return sorted({math.exp(rate / e) for e in sym_exponents(d) if e != 0})


def check_pole_clearance(d: int, s: complex, p: int) -> None:
    """
    Raises:
        ConditioningError: a pole ring lies within POLE_CLEARANCE of |beta| = 1
    """
    for radius in pole_radii(d, s, p):
        if abs(radius - 1.0) <= POLE_CLEARANCE:
            raise ConditioningError(
                f"Pole ring at |beta| = {radius:.9f} is too close to the unit circle",
                details={'d': d, 's': complex(s), 'p': p},
            )


def lfactor_spectral(d: int, s: complex, p: int) -> SpectralFunction:
    """
    h_{s,p,d} as an n=2 torus evaluator (symmetric under beta -> 1/beta)

    Raises:
        DomainError: |p^-s| = 1 puts poles on the torus
    """
    if not is_prime(p):
        raise ContextError(f"p must be prime, got {p}")
    if d < 1:
        raise DomainError(f"Symmetric-power degree must be >= 1, got {d}")
    if complex(s).real <= 0:
        raise DomainError(
            f"Re(s) = {complex(s).real} puts poles of h_(s,p,d) on the torus",
            details={'s': complex(s)},
        )

    def evaluator(points: np.ndarray) -> np.ndarray:
        return lfactor_values(d, s, p, np.asarray(points, dtype=complex)[:, 0])

    return SpectralFunction(PrimeContext(p=p, n=2), evaluator=evaluator, symmetric=True,
                            label=f"Sym^{d} local factor at s={s}")


def contour_mean(f: Callable[[np.ndarray], np.ndarray], N: int) -> complex:
    """N-point trapezoid value of (1/2 pi i) * contour integral of f(beta) dbeta/beta on |beta| = 1"""
    return tree_sum(np.asarray(f(circle_nodes(N)), dtype=complex)) / N


__all__ = [
    'sym_exponents',
    'x_power',
    'check_local_query',
    'local_lfactor',
    'lfactor_values',
    'pole_radii',
    'check_pole_clearance',
    'lfactor_spectral',
    'contour_mean',
]
