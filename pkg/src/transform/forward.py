"""
Forward Whittaker Transform

    h#(alpha) = integral of h(t) W_alpha(t) d^x t
              = sum_v h(v) * W_alpha(v) * measure_weight(v)
              = sum_v h(v) * delta^(-1/2)(v) * s_v(alpha)

Each multiplicative shell p^v Z_p^x carries mass 1, so the measure on the
shell of valuation v is 1/delta(v).

Part of: whittaker_lab - p-adic Whittaker transform toolkit
"""

from typing import Callable, Iterable, Optional, Tuple

import numpy as np

from configs.lab_settings import DEFAULT_TRUNCATION
from src.algebra.laurent import LaurentPoly
from src.common.errors import ContractError, DimensionError, DomainError
from src.common.models import DecayBound, PrimeContext
from src.common.parallel import ordered_map, tree_sum
from src.common.series import TruncatedSum, forward_log_coefficient, roundoff_bound, shell_tail
from src.report.console import step
from src.symmetric.partitions import as_index, cube_array, partitions_of, weyl_dimensions
from src.symmetric.schur import SpectralLike, schur_batch, schur_laurent, spectral_array
from src.transform.functions import CompactFunction, SpectralFunction
from src.whittaker.spherical import delta_half, modular_exponent, p_half_power

LatticeEvaluator = Callable[[Tuple[int, ...]], complex]


def measure_weight(v: Iterable[int], ctx: PrimeContext) -> float:
    """p^(sum_k v_k k (n - k)) = 1 / delta(v)"""
    return p_half_power(ctx.p, 2 * modular_exponent(v, ctx))


def _spectral_for(a: SpectralLike, ctx: PrimeContext) -> np.ndarray:
    alpha = spectral_array(a)
    if alpha.size != ctx.n:
        raise DimensionError(
            f"{alpha.size} spectral parameters given for rank {ctx.n}",
            details={'n': ctx.n},
        )
    return alpha


def _weighted_terms(ms: np.ndarray, coefficients: np.ndarray, alpha: np.ndarray,
                    ctx: PrimeContext, epsilon: float) -> np.ndarray:
    """coefficient(v) * delta^(-1/2)(v) * p^(-epsilon |v|) * s_v(alpha), row-wise"""
    schur = schur_batch(ms, alpha)
    inverse_half = np.array([p_half_power(ctx.p, modular_exponent(m, ctx)) for m in ms])
    terms = coefficients * inverse_half * schur
    if epsilon:
        sizes = partitions_of(ms).sum(axis=1)
        terms = terms * float(ctx.p) ** (-epsilon * sizes)
    return terms


def forward_transform(h: CompactFunction, a: SpectralLike, epsilon: float = 0.0) -> complex:
    """
    h#(alpha), optionally with the regularizing weight prod |t_k|^(epsilon (n-k))

    Examples:
        forward_transform(CompactFunction.indicator((0,), ctx), alpha)    -> 1
        forward_transform(schur_inverse_image(m, ctx), alpha)             -> s_m(alpha)
    """
    if epsilon < 0:
        raise DomainError(f"epsilon must be >= 0, got {epsilon}")
    alpha = _spectral_for(a, h.ctx)
    items = h.items()
    if not items:
        return 0j
    ms = np.array([k for k, _ in items], dtype=np.int64).reshape(len(items), h.ctx.nvars)
    coefficients = np.array([c for _, c in items], dtype=complex)
    return tree_sum(_weighted_terms(ms, coefficients, alpha, h.ctx, epsilon))


def forward_transform_series(hval: LatticeEvaluator,
                             a: SpectralLike,
                             eta: float,
                             M: int = DEFAULT_TRUNCATION,
                             *,
                             ctx: PrimeContext,
                             decay: Optional[DecayBound] = None,
                             verbose: bool = False) -> TruncatedSum:
    """
    Forward transform of an infinitely supported h, truncated to the cube [0, M]^(n-1)

    The caller declares |hval(v)| <= C delta^(1/2)(v) p^(-(eta + epsilon0) |v|)
    through `decay`, with max |alpha_i| <= p^eta. Evaluated terms are
    checked against the declaration.

    Raises:
        ContractError: no decay declared, or an evaluated value breaks it
        DomainError: alpha outside the annulus of radius p^eta
    """
    if decay is None:
        raise ContractError("forward_transform_series needs a declared DecayBound")
    if abs(decay.eta - eta) > 0.0:
        raise ContractError(
            f"Declared decay uses eta={decay.eta}, call uses eta={eta}",
            details={'declared_eta': decay.eta, 'eta': eta},
        )
    alpha = _spectral_for(a, ctx)
    radius = float(ctx.p) ** eta
    if float(np.max(np.abs(alpha))) > radius * (1 + 1e-12):
        raise DomainError(
            f"max |alpha_i| = {np.max(np.abs(alpha)):.6g} exceeds p^eta = {radius:.6g}",
            details={'eta': eta},
        )

    ms = cube_array(ctx.n, M)
    if verbose:
        step(f"[1/2] Evaluating h on {len(ms)} lattice points")
    values = np.asarray(ordered_map(hval, [tuple(int(x) for x in m) for m in ms]), dtype=complex)

    sizes = partitions_of(ms).sum(axis=1)
    envelope = decay.constant * np.array([delta_half(m, ctx) for m in ms]) * float(ctx.p) ** (-decay.rate * sizes)
    excess = np.abs(values) - envelope * (1 + 1e-9)
    if np.any(excess > 1e-300):
        worst = int(np.argmax(excess))
        raise ContractError(
            f"h violates its declared decay at v={tuple(ms[worst])}",
            details={'v': ms[worst].tolist(), 'value': abs(values[worst]), 'bound': float(envelope[worst])},
        )

    if verbose:
        step("[2/2] Summing terms and tail majorant")
    terms = _weighted_terms(ms, values, alpha, ctx, 0.0)
    ratio = float(np.max(np.abs(alpha))) * float(ctx.p) ** (-decay.rate)
    majorants = decay.constant * weyl_dimensions(ms) * ratio ** sizes
    truncation = 0.0 if decay.constant == 0 else decay.constant * shell_tail(forward_log_coefficient(ctx.n), ratio, M + 1)

    return TruncatedSum(
        value=tree_sum(terms),
        truncation_bound=truncation,
        roundoff_bound=roundoff_bound(np.abs(terms), majorants),
        truncation=M,
        terms=len(ms),
    )


def forward_transform_laurent(h: CompactFunction) -> SpectralFunction:
    """Exact image sum_v h(v) delta^(-1/2)(v) s_v(beta) as a Laurent polynomial"""
    ctx = h.ctx
    total = LaurentPoly({}, ctx.n)
    for v, value in h.items():
        if value == 0:
            continue
        weight = value * p_half_power(ctx.p, modular_exponent(v, ctx))
        total = total + schur_laurent(v, False, ctx.n) * weight
    return SpectralFunction(ctx, exact=total, symmetric=True, label="forward image")


def schur_inverse_image(m: Iterable[int], ctx: PrimeContext) -> CompactFunction:
    """delta^(1/2) * indicator(v = m), whose forward transform is s_m"""
    m = as_index(m, ctx.n)
    return CompactFunction.indicator(m, ctx, value=delta_half(m, ctx))


__all__ = [
    'LatticeEvaluator',
    'measure_weight',
    'forward_transform',
    'forward_transform_series',
    'forward_transform_laurent',
    'schur_inverse_image',
]
