"""
Identity Suites

Seeded property checks of the library against its closed forms:

    cauchy      truncated Cauchy sum vs product formula, Cauchy determinant
    stade       regularized Whittaker pairing vs product formula
    inversion   (H_flat)# = H and (h#)_flat = h
    plancherel  geometric vs spectral pairing
    lfactor     closed forms vs contour oracle, vanishing branches,
                substitution symmetry, integral representation

Every trial draws from its own generator split from one seed, so
reports do not depend on the worker count.

Part of: whittaker_lab - p-adic Whittaker transform toolkit
"""

import math
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.algebra.laurent import LaurentPoly
from src.common.models import LFactorQuery, PrimeContext, RegularizedPairingParams
from src.common.parallel import ordered_map, spawn_generators
from src.lfactors.flat_profiles import FLAT_PROFILES, lfactor_flat_closed, lfactor_flat_numeric, substitution_defect
from src.lfactors.integral_check import verify_integral_representation
from src.lfactors.local_factors import local_lfactor
from src.report.console import step
from src.symmetric.cauchy import cauchy_determinant_check, cauchy_lhs_truncated, cauchy_rhs
from src.symmetric.partitions import cube_indices, partition_size
from src.symmetric.schur import schur_laurent
from src.transform.forward import forward_transform, forward_transform_laurent
from src.transform.functions import CompactFunction, SpectralFunction
from src.transform.inverse import inverse_transform_table
from src.transform.pairing import plancherel_geometric, plancherel_spectral, stade_rhs, whittaker_pairing
from src.verification.suite_report import SuiteReport, relative_error

# Absolute floor added to relative tolerances of the L-factor comparisons
LFACTOR_ABSOLUTE_FLOOR = 1e-12
VANISHING_TOLERANCE = 1e-10
SUBSTITUTION_TOLERANCE = 1e-10
SYMMETRY_TOLERANCE = 1e-12


# ============================================================================
# Random draws
# ============================================================================

def _phases(rng: np.random.Generator, count: int) -> np.ndarray:
    return np.exp(2j * np.pi * rng.uniform(0.0, 1.0, size=count))


def random_disc_point(rng: np.random.Generator, n: int, low: float, high: float) -> np.ndarray:
    """n parameters with moduli uniform in [low, high] and uniform phases"""
    return rng.uniform(low, high, size=n) * _phases(rng, n)


def random_torus_alphabet(rng: np.random.Generator, n: int) -> np.ndarray:
    """Tempered parameters with product exactly 1: (beta_1, ..., beta_{n-1}, 1/prod)"""
    angles = rng.uniform(0.0, 2.0 * np.pi, size=n - 1)
    return np.exp(1j * np.append(angles, -np.sum(angles)))


def _random_coefficients(rng: np.random.Generator, count: int) -> np.ndarray:
    return rng.standard_normal(count) + 1j * rng.standard_normal(count)


def random_compact_function(rng: np.random.Generator, ctx: PrimeContext, side: int) -> CompactFunction:
    """Dense random h on the cube [0, side]^(n-1)"""
    box = list(cube_indices(ctx.n, side))
    values = _random_coefficients(rng, len(box))
    return CompactFunction(values=dict(zip(box, values)), ctx=ctx)


def small_indices(n: int, max_size: int) -> List[Tuple[int, ...]]:
    """Every m with |partition| <= max_size"""
    return [m for m in cube_indices(n, max_size) if partition_size(m) <= max_size]


def random_schur_combination(rng: np.random.Generator, ctx: PrimeContext,
                             max_size: int, terms: int = 4) -> SpectralFunction:
    """sum of c_m s_m over a few random m with |partition| <= max_size"""
    candidates = small_indices(ctx.n, max_size)
    picks = rng.choice(len(candidates), size=min(terms, len(candidates)), replace=False)
    coefficients = _random_coefficients(rng, len(picks))
    total = LaurentPoly({}, ctx.n)
    for index, c in zip(sorted(int(i) for i in picks), coefficients):
        total = total + schur_laurent(candidates[index], False, ctx.n) * complex(c)
    return SpectralFunction(ctx, exact=total, symmetric=True, label="random Schur combination")


# ============================================================================
# Suites
# ============================================================================

def verify_cauchy(n: int = 3,
                  trials: int = 50,
                  seed: int = 0,
                  M: int = 60,
                  q_max: float = 0.6,
                  tol: float = 1e-10,
                  verbose: bool = False) -> SuiteReport:
    """Truncated Cauchy sums against the product formula, within their tail bounds"""
    report = SuiteReport("cauchy", seed, trials, {'n': n, 'M': M, 'q_max': q_max, 'tol': tol})
    radius = math.sqrt(q_max)
    if verbose:
        step(f"[1/1] {trials} Cauchy trials at n={n}, M={M}")

    def trial(rng: np.random.Generator):
        alpha = random_disc_point(rng, n, 0.1, radius)
        beta = random_disc_point(rng, n, 0.1, radius)
        series = cauchy_lhs_truncated(alpha, beta, M)
        determinant, closed = cauchy_determinant_check(alpha, beta)
        return series, cauchy_rhs(alpha, beta), determinant, closed

    for i, (series, rhs, determinant, closed) in enumerate(ordered_map(trial, spawn_generators(seed, trials))):
        report.compare(f"cauchy sum, trial {i}", series.value, rhs, series.tail_bound,
                       truncation_bound=series.truncation_bound, roundoff_bound=series.roundoff_bound)
        report.compare(f"cauchy determinant, trial {i}", determinant, closed, tol,
                       error=relative_error(determinant, closed))
    report.finalize()
    return report


def verify_stade(n: int = 3,
                 p: int = 2,
                 trials: int = 50,
                 seed: int = 0,
                 epsilons: Sequence[float] = (0.05, 0.1, 0.5),
                 M: int = 60,
                 verbose: bool = False) -> SuiteReport:
    """Regularized pairings against the Stade-type product formula"""
    ctx = PrimeContext(p=p, n=n)
    report = SuiteReport("stade", seed, trials, {'n': n, 'p': p, 'M': M, 'epsilons': list(epsilons)})
    if verbose:
        step(f"[1/1] {trials} trials x {len(epsilons)} epsilons at n={n}, p={p}")

    def trial(rng: np.random.Generator):
        alpha = random_disc_point(rng, n, 0.3, 0.75)
        beta = random_disc_point(rng, n, 0.3, 0.75)
        rows = []
        for epsilon in epsilons:
            params = RegularizedPairingParams(epsilon=epsilon, truncation=M)
            rows.append((epsilon, whittaker_pairing(alpha, beta, params, ctx), stade_rhs(alpha, beta, epsilon, ctx)))
        return rows

    for i, rows in enumerate(ordered_map(trial, spawn_generators(seed, trials))):
        for epsilon, pairing, closed in rows:
            report.compare(f"stade pairing, trial {i}, epsilon={epsilon}", pairing.value, closed,
                           pairing.tail_bound, truncation_bound=pairing.truncation_bound,
                           roundoff_bound=pairing.roundoff_bound)
    report.finalize()
    return report


def verify_inversion(n: int = 3,
                     p: int = 2,
                     trials: int = 20,
                     seed: int = 0,
                     max_size: int = 6,
                     points: int = 25,
                     side: int = 4,
                     tol: float = 1e-9,
                     geometric_tol: float = 1e-10,
                     verbose: bool = False) -> SuiteReport:
    """
    Both inversion round trips

    spectral:  H = sum c_m s_m exact, H_flat tabulated on [0, max_size]^(n-1),
               (H_flat)# = H at torus points
    geometric: h random on [0, side]^(n-1), (h#)_flat = h coefficientwise
    """
    ctx = PrimeContext(p=p, n=n)
    report = SuiteReport("inversion", seed, trials, {
        'n': n, 'p': p, 'max_size': max_size, 'points': points, 'side': side,
        'tol': tol, 'geometric_tol': geometric_tol,
    })
    generators = spawn_generators(seed, 2 * trials)

    def spectral_trial(rng: np.random.Generator) -> float:
        H = random_schur_combination(rng, ctx, max_size)
        h = inverse_transform_table(H, max_size)
        worst = 0.0
        for _ in range(points):
            alphabet = random_torus_alphabet(rng, n)
            expected = H(alphabet[:n - 1])
            worst = max(worst, relative_error(forward_transform(h, alphabet), expected))
        return worst

    def geometric_trial(rng: np.random.Generator) -> Tuple[float, float]:
        h = random_compact_function(rng, ctx, side)
        back = inverse_transform_table(forward_transform_laurent(h), side)
        scale = max(1.0, max(abs(c) for _, c in h.items()))
        return h.max_abs_difference(back), scale

    if verbose:
        step(f"[1/2] Spectral round trips, {trials} trials at n={n}")
    for i, worst in enumerate(ordered_map(spectral_trial, generators[:trials])):
        report.compare(f"spectral round trip, trial {i}", worst, 0.0, tol, error=worst)

    if verbose:
        step(f"[2/2] Geometric round trips on [0, {side}]^{n - 1}")
    for i, (difference, scale) in enumerate(ordered_map(geometric_trial, generators[trials:])):
        report.compare(f"geometric round trip, trial {i}", difference, 0.0, geometric_tol * scale,
                       error=difference)
    report.finalize()
    return report


def verify_plancherel(n: int = 3,
                      p: int = 2,
                      side: int = 3,
                      trials: int = 20,
                      seed: int = 0,
                      tol: float = 1e-10,
                      verbose: bool = False) -> SuiteReport:
    """Geometric pairing sum h1 conj(h2) / delta against the spectral constant-term pairing"""
    ctx = PrimeContext(p=p, n=n)
    report = SuiteReport("plancherel", seed, trials, {'n': n, 'p': p, 'cube': side, 'tol': tol})
    if verbose:
        step(f"[1/1] {trials} Plancherel trials on [0, {side}]^{n - 1}")

    def trial(rng: np.random.Generator) -> Tuple[complex, complex]:
        h1 = random_compact_function(rng, ctx, side)
        h2 = random_compact_function(rng, ctx, side)
        geometric = plancherel_geometric(h1, h2)
        spectral = plancherel_spectral(forward_transform_laurent(h1), forward_transform_laurent(h2))
        return geometric, spectral

    for i, (geometric, spectral) in enumerate(ordered_map(trial, spawn_generators(seed, trials))):
        report.compare(f"plancherel, trial {i}", spectral, geometric, tol,
                       error=relative_error(spectral, geometric))
    report.finalize()
    return report


def _lfactor_error(closed: complex, numeric: complex, tol: float) -> float:
    """|closed - numeric| scaled so that error <= tol means within tol relative plus the absolute floor"""
    return abs(closed - numeric) / (abs(closed) + LFACTOR_ABSOLUTE_FLOOR / tol)


def verify_lfactor(ds: Sequence[int] = (1, 2, 3, 4),
                   ps: Sequence[int] = (2, 3, 5),
                   ss: Sequence[complex] = (2.0, 2.5, 3 + 0.5j),
                   lambda_max: int = 12,
                   N: int = 1024,
                   tol: float = 1e-8,
                   seed: int = 0,
                   trials: int = 5,
                   integral_ps: Sequence[int] = (2, 3),
                   integral_s: complex = 2.5,
                   M: int = 80,
                   verbose: bool = False) -> SuiteReport:
    """
    L-factor suite

    Per (d, p, s): closed vs contour oracle over lambda = 0..lambda_max
    (self-consistency under N-doubling when d has no closed form),
    vanishing residue classes, and the beta -> 1/beta substitution.
    Per (d, p) and each of `trials` seeded unit-circle alphas: the
    integral representation and alpha -> 1/alpha symmetry.
    """
    report = SuiteReport("lfactor", seed, trials, {
        'd': list(ds), 'p': list(ps), 's': [complex(s) for s in ss], 'lambda_max': lambda_max,
        'N': N, 'tol': tol, 'integral_p': list(integral_ps), 'integral_s': complex(integral_s), 'M': M,
    })
    grid = [(d, p, complex(s)) for d in ds for p in ps for s in ss]
    lambdas = range(lambda_max + 1)

    if verbose:
        step(f"[1/2] Oracle agreement on {len(grid)} (d, p, s) configurations")

    def oracle(config: Tuple[int, int, complex]) -> Dict:
        d, p, s = config
        numeric = [lfactor_flat_numeric(d, lam, p, s, N) for lam in lambdas]
        if d in FLAT_PROFILES:
            closed = [lfactor_flat_closed(d, lam, p, s) for lam in lambdas]
        else:
            closed = [lfactor_flat_numeric(d, lam, p, s, 2 * N) for lam in lambdas]
        defects = [substitution_defect(d, lam, p, s, N) for lam in lambdas]
        return {'closed': closed, 'numeric': numeric, 'defects': defects}

    for (d, p, s), result in zip(grid, ordered_map(oracle, grid)):
        label = f"d={d}, p={p}, s={s}"
        errors = [_lfactor_error(c, x, tol) for c, x in zip(result['closed'], result['numeric'])]
        worst = int(np.argmax(errors))
        name = "oracle agreement" if d in FLAT_PROFILES else "N-doubling consistency"
        report.compare(f"{name}, {label}", result['numeric'][worst], result['closed'][worst], tol,
                       error=errors[worst], worst_lambda=worst, cross_checked=d in FLAT_PROFILES)

        if d in FLAT_PROFILES:
            profile = FLAT_PROFILES[d]
            vanishing = [lam for lam in lambdas if profile.branch(lam).vanishes]
            if vanishing:
                closed_max = max(abs(result['closed'][lam]) for lam in vanishing)
                numeric_max = max(abs(result['numeric'][lam]) for lam in vanishing)
                report.compare(f"vanishing branches (closed), {label}", closed_max, 0.0, 0.0,
                               error=closed_max, lambdas=vanishing)
                report.compare(f"vanishing branches (quadrature), {label}", numeric_max, 0.0,
                               VANISHING_TOLERANCE, error=numeric_max, lambdas=vanishing)

        defect = max(result['defects'])
        report.compare(f"substitution symmetry, {label}", defect, 0.0, SUBSTITUTION_TOLERANCE, error=defect)

    if verbose:
        step(f"[2/2] Integral representation, {trials} phases per (d, p), M={M}")
    phases = [complex(np.exp(2j * np.pi * rng.uniform())) for rng in spawn_generators(seed, trials)]
    queries = [LFactorQuery(d=d, alpha=alpha, p=p, s=integral_s)
               for d in ds for p in integral_ps for alpha in phases]
    integral_reports = ordered_map(lambda q: verify_integral_representation(q, M), queries)

    for q, result in zip(queries, integral_reports):
        label = f"d={q.d}, p={q.p}, alpha=exp({np.angle(q.alpha):.6f}i)"
        flipped = local_lfactor(LFactorQuery(d=q.d, alpha=1.0 / q.alpha, p=q.p, s=q.s))
        report.compare(f"alpha -> 1/alpha symmetry, {label}", flipped, result.lfactor, SYMMETRY_TOLERANCE,
                       error=relative_error(flipped, result.lfactor))
        if result.diverged:
            report.diverged(f"integral representation, {label}", result.message)
            continue
        report.compare(f"integral representation, {label}", result.series_value, result.lfactor,
                       min(tol, result.tail_bound), error=result.discrepancy,
                       tail_bound=result.tail_bound, closed_form=result.closed_form)
    report.finalize()
    return report


__all__ = [
    'LFACTOR_ABSOLUTE_FLOOR',
    'random_disc_point',
    'random_torus_alphabet',
    'random_compact_function',
    'random_schur_combination',
    'small_indices',
    'verify_cauchy',
    'verify_stade',
    'verify_inversion',
    'verify_plancherel',
    'verify_lfactor',
]
