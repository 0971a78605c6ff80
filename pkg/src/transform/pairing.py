"""
Whittaker Pairings

Stade-type product formula
    sum_m s_m(alpha) s_m(beta) p^(-epsilon |m|)
        = (1 - prod alpha prod beta p^(-epsilon n)) / prod_{i,j} (1 - alpha_i beta_j p^(-epsilon))

and the two sides of the Plancherel formula.

Part of: whittaker_lab - p-adic Whittaker transform toolkit
"""

import math

import numpy as np

from src.algebra.laurent import lp_pairing
from src.common.errors import ContractError, DimensionError, DomainError, PoleError
from src.common.models import PrimeContext, RegularizedPairingParams
from src.common.parallel import tree_sum
from src.common.series import TruncatedSum, cauchy_log_coefficient, roundoff_bound, shell_tail
from src.symmetric.partitions import cube_array, partitions_of, weyl_dimensions
from src.symmetric.schur import SpectralLike, schur_batch, spectral_array
from src.transform.forward import measure_weight
from src.transform.functions import CompactFunction, SpectralFunction
from src.transform.inverse import vandermonde_laurent

_POLE_GUARD = 1e-14


def _pair_for(a: SpectralLike, b: SpectralLike, ctx: PrimeContext):
    alpha, beta = spectral_array(a), spectral_array(b)
    if alpha.size != ctx.n or beta.size != ctx.n:
        raise DimensionError(
            f"Spectral vectors of length {alpha.size} and {beta.size} for rank {ctx.n}",
            details={'n': ctx.n},
        )
    return alpha, beta


def whittaker_pairing(a: SpectralLike,
                      b: SpectralLike,
                      params: RegularizedPairingParams,
                      ctx: PrimeContext) -> TruncatedSum:
    """
    Regularized integral of W_alpha W_beta prod |t_k|^(epsilon (n-k)) over the cube [0, M]^(n-1)

    Raises:
        DomainError: some |alpha_i beta_j| > 1, or = 1 with epsilon = 0
    """
    alpha, beta = _pair_for(a, b, ctx)
    largest = float(np.max(np.abs(np.outer(alpha, beta))))
    if largest > 1.0 + 1e-12 or (params.epsilon == 0 and largest >= 1.0):
        raise DomainError(
            f"Pairing diverges: max |alpha_i beta_j| = {largest:.6g} with epsilon = {params.epsilon}",
            details={'max_product': largest, 'epsilon': params.epsilon},
        )
    q = largest * float(ctx.p) ** (-params.epsilon)

    ms = cube_array(ctx.n, params.truncation)
    sizes = partitions_of(ms).sum(axis=1)
    weights = float(ctx.p) ** (-params.epsilon * sizes)
    terms = schur_batch(ms, alpha) * schur_batch(ms, beta) * weights
    majorants = weyl_dimensions(ms) ** 2 * q ** sizes

    return TruncatedSum(
        value=tree_sum(terms),
        truncation_bound=shell_tail(cauchy_log_coefficient(ctx.n), q, params.truncation + 1),
        roundoff_bound=roundoff_bound(np.abs(terms), majorants),
        truncation=params.truncation,
        terms=len(ms),
    )


def stade_rhs(a: SpectralLike, b: SpectralLike, epsilon: float, ctx: PrimeContext) -> complex:
    """
    Closed form of the regularized pairing

    Raises:
        PoleError: a factor 1 - alpha_i beta_j p^-epsilon vanishes
    """
    alpha, beta = _pair_for(a, b, ctx)
    shrink = float(ctx.p) ** (-epsilon)
    factors = 1.0 - np.outer(alpha, beta) * shrink
    if np.any(np.abs(factors) <= _POLE_GUARD):
        raise PoleError(
            "Denominator factor 1 - alpha_i beta_j p^-epsilon vanishes",
            details={'epsilon': epsilon},
        )
    numerator = 1.0 - np.prod(alpha) * np.prod(beta) * float(ctx.p) ** (-epsilon * ctx.n)
    return complex(numerator / np.prod(factors))


def plancherel_geometric(h1: CompactFunction, h2: CompactFunction) -> complex:
    """<h1, h2> = sum_v h1(v) conj(h2(v)) / delta(v)"""
    if h1.ctx != h2.ctx:
        raise DimensionError("Functions live in different prime/rank contexts")
    common = sorted(set(h1.values) & set(h2.values))
    terms = [h1(v) * h2(v).conjugate() * measure_weight(v, h1.ctx) for v in common]
    return tree_sum(terms)


def plancherel_spectral(H1: SpectralFunction, H2: SpectralFunction) -> complex:
    """1/n! * CT(H1 * conj(H2) * prod_{i != j} (beta_i - beta_j)) on exact representatives"""
    if not (H1.is_exact and H2.is_exact):
        raise ContractError("plancherel_spectral needs exact Laurent representatives")
    if H1.ctx != H2.ctx:
        raise DimensionError("Functions live in different prime/rank contexts")
    n = H1.ctx.n
    weight = H2.exact.conjugate_inverted() * vandermonde_laurent(n)
    return lp_pairing(H1.exact, weight) / math.factorial(n)


__all__ = [
    'whittaker_pairing',
    'stade_rhs',
    'plancherel_geometric',
    'plancherel_spectral',
]
