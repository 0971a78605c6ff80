"""
Unramified Whittaker Functions

Shintani's formula in valuation coordinates v_k = -log_p |t_k|_p:

    W_alpha(v) = delta^(1/2)(v) * s_v(alpha)   if every v_k >= 0
               = 0                            otherwise

with the modular factor delta(v) = p^(-sum_k v_k k (n - k)).

Part of: whittaker_lab - p-adic Whittaker transform toolkit
"""

import math
from typing import Iterable, Tuple

import numpy as np

from src.algebra.laurent import LaurentPoly
from src.common.errors import DimensionError, SupportError
from src.common.models import PrimeContext
from src.symmetric.partitions import as_index
from src.symmetric.schur import SpectralLike, schur_grid, schur_jacobi_trudi, schur_laurent, spectral_array

ValuationVector = Tuple[int, ...]


def modular_exponent(v: Iterable[int], ctx: PrimeContext) -> int:
    """S(v) = sum_k v_k * k * (n - k), so that delta(v) = p^-S"""
    v = as_index(v, ctx.n)
    return sum(vk * k * (ctx.n - k) for k, vk in enumerate(v, start=1))


def p_half_power(p: int, exponent: int) -> float:
    """p^(exponent / 2) for an integer exponent, without rooting floating intermediates"""
    whole, odd = divmod(exponent, 2)
    try:
        value = float(p) ** whole
    except OverflowError:
        return math.inf
    if odd:
        value *= math.sqrt(p)
    return value


def delta(v: Iterable[int], ctx: PrimeContext) -> float:
    """
    Modular factor p^(-sum v_k k (n-k))

    Examples:
        delta((3,), PrimeContext(p=2, n=2))    -> 2^-3
        delta((1, 2), PrimeContext(p=5, n=3))  -> 5^-6
    """
    return p_half_power(ctx.p, -2 * modular_exponent(v, ctx))


def delta_half(v: Iterable[int], ctx: PrimeContext) -> float:
    """delta^(1/2)(v), an exact half-integer power of p"""
    return p_half_power(ctx.p, -modular_exponent(v, ctx))


def _check_rank(alpha: np.ndarray, ctx: PrimeContext) -> None:
    if alpha.size != ctx.n:
        raise DimensionError(
            f"{alpha.size} spectral parameters given for rank {ctx.n}",
            details={'n': ctx.n},
        )


def in_support(v: Iterable[int]) -> bool:
    return all(vk >= 0 for vk in v)


def whittaker_eval(a: SpectralLike, v: Iterable[int], ctx: PrimeContext) -> complex:
    """W_alpha(v); W_alpha(0) = 1 for every alpha"""
    alpha = spectral_array(a)
    _check_rank(alpha, ctx)
    v = as_index(v, ctx.n)
    if not in_support(v):
        return 0j
    return delta_half(v, ctx) * schur_jacobi_trudi(v, alpha)


def whittaker_grid(alphas: np.ndarray, v: Iterable[int], ctx: PrimeContext) -> np.ndarray:
    """W_alpha(v) at every row of a (K, n) array of alphabets"""
    alphas = np.asarray(alphas, dtype=complex)
    v = as_index(v, ctx.n)
    if alphas.shape[-1] != ctx.n:
        raise DimensionError(f"Alphabets have {alphas.shape[-1]} letters, expected {ctx.n}")
    if not in_support(v):
        return np.zeros(alphas.shape[0], dtype=complex)
    return delta_half(v, ctx) * schur_grid(v, alphas)


def whittaker_laurent(v: Iterable[int], inverted: bool, ctx: PrimeContext) -> LaurentPoly:
    """
    delta^(1/2)(v) * s_v(beta) (or s_v(1/beta)) on the torus

    Raises:
        SupportError: some v_k < 0; the function vanishes there
    """
    v = as_index(v, ctx.n)
    if not in_support(v):
        raise SupportError(
            f"Valuation vector {v} lies outside the support cone",
            details={'v': list(v)},
        )
    return schur_laurent(v, inverted, ctx.n) * delta_half(v, ctx)


def torus_point_to_alphabet(beta: np.ndarray) -> np.ndarray:
    """Append beta_n = 1/(beta_1 ... beta_{n-1}); works row-wise on (K, n-1) arrays"""
    beta = np.asarray(beta, dtype=complex)
    last = 1.0 / np.prod(beta, axis=-1, keepdims=True)
    return np.concatenate([beta, last], axis=-1)


__all__ = [
    'ValuationVector',
    'modular_exponent',
    'p_half_power',
    'delta',
    'delta_half',
    'in_support',
    'whittaker_eval',
    'whittaker_grid',
    'whittaker_laurent',
    'torus_point_to_alphabet',
]
