"""
Inverse Whittaker Transform

    H_flat(v) = 1/(n! (2 pi i)^(n-1)) * integral over the torus of
                H(beta) W_{1/beta}(v) prod_{i != j} (beta_i - beta_j) dbeta/beta

with beta_n = 1/(beta_1 ... beta_{n-1}). The exact path reads the constant
term of the Laurent integrand; the quadrature path applies the tensor
trapezoid rule. Both vanish off the cone v_k >= 0.

Part of: whittaker_lab - p-adic Whittaker transform toolkit
"""

import math
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Optional, Tuple

import numpy as np

from configs.lab_settings import QUADRATURE_MIN_NODES
from src.algebra.laurent import LaurentPoly, lp_constant, lp_pairing
from src.common.errors import ContractError, DomainError
from src.common.models import PrimeContext
from src.common.parallel import ordered_map
from src.report.console import step
from src.symmetric.partitions import as_index, cube_indices
from src.symmetric.schur import torus_alphabet
from src.transform.functions import CompactFunction, SpectralFunction
from src.transform.quadrature import torus_mean
from src.whittaker.spherical import in_support, torus_point_to_alphabet, whittaker_grid, whittaker_laurent


@lru_cache(maxsize=16)
def vandermonde_laurent(n: int) -> LaurentPoly:
    """prod_{i != j} (beta_i - beta_j) over the torus alphabet"""
    letters = torus_alphabet(n, inverted=False)
    product = lp_constant(1.0, n)
    for i, j in permutations(range(n), 2):
        product = product * (letters[i] - letters[j])
    return product


def vandermonde_values(alphabet: np.ndarray) -> np.ndarray:
    """prod_{i != j} (x_i - x_j), row-wise on a (K, n) array"""
    n = alphabet.shape[1]
    values = np.ones(alphabet.shape[0], dtype=complex)
    for i, j in permutations(range(n), 2):
        values *= alphabet[:, i] - alphabet[:, j]
    return values


@lru_cache(maxsize=4096)
def _kernel(v: Tuple[int, ...], ctx: PrimeContext) -> LaurentPoly:
    """W_{1/beta}(v) * Vandermonde / n!"""
    return whittaker_laurent(v, True, ctx) * vandermonde_laurent(ctx.n) * (1.0 / math.factorial(ctx.n))


def inverse_transform_exact(H: SpectralFunction, v: Iterable[int]) -> complex:
    """
    Constant-term inverse transform of an exact symmetric H

    Raises:
        ContractError: H carries no polynomial, or fails the symmetry check
    """
    if not H.is_exact:
        raise ContractError("inverse_transform_exact needs an exact Laurent representative")
    H.ensure_symmetric()
    v = as_index(v, H.ctx.n)
    if not in_support(v):
        return 0j
    return lp_pairing(H.exact, _kernel(v, H.ctx))


def inverse_transform_quadrature(H: SpectralFunction, v: Iterable[int], N: int) -> complex:
    """Tensor trapezoid rule with N nodes per circle"""
    if N < QUADRATURE_MIN_NODES:
        raise DomainError(f"Quadrature needs N >= {QUADRATURE_MIN_NODES}, got {N}")
    H.ensure_symmetric()
    ctx = H.ctx
    v = as_index(v, ctx.n)
    if not in_support(v):
        return 0j

    def integrand(beta: np.ndarray) -> np.ndarray:
        alphabet = torus_point_to_alphabet(beta)
        return H.evaluate(beta) * whittaker_grid(1.0 / alphabet, v, ctx) * vandermonde_values(alphabet)

    return torus_mean(integrand, N, ctx.nvars) / math.factorial(ctx.n)


def inverse_transform_table(H: SpectralFunction,
                            side: int,
                            N: Optional[int] = None,
                            verbose: bool = False) -> CompactFunction:
    """
    H_flat on every v of the cube [0, side]^(n-1)

    Exact functions use the constant-term path; evaluators need N.
    """
    if not H.is_exact and N is None:
        raise DomainError("Tabulating an evaluator requires a node count N")
    box = list(cube_indices(H.ctx.n, side))
    if verbose:
        step(f"Inverting on {len(box)} valuation vectors")
    H.ensure_symmetric()
    if H.is_exact:
        values = ordered_map(lambda v: inverse_transform_exact(H, v), box)
    else:
        values = ordered_map(lambda v: inverse_transform_quadrature(H, v, N), box)
    return CompactFunction(values=dict(zip(box, values)), ctx=H.ctx)


def exact_node_count(H: SpectralFunction, v: Iterable[int]) -> int:
    """Smallest N for which the trapezoid rule reproduces the exact path"""
    if not H.is_exact:
        raise ContractError("Node count is only determined for exact functions")
    v = as_index(v, H.ctx.n)
    if not in_support(v):
        return QUADRATURE_MIN_NODES
    spreads = (H.exact.max_abs_exponent() + _kernel(v, H.ctx).max_abs_exponent())
    return max(QUADRATURE_MIN_NODES, spreads + 1)


__all__ = [
    'vandermonde_laurent',
    'vandermonde_values',
    'inverse_transform_exact',
    'inverse_transform_quadrature',
    'inverse_transform_table',
    'exact_node_count',
]
