"""
Inverse Transforms of Symmetric-Power L-Factors

At rank 2 the inverse transform of h_{s,p,d} at |t_1|_p = p^-lambda is

    (h_{s,p,d})_flat(lambda) = p^(-lambda/2) (c_lambda - c_{lambda+2})

where c_k is the beta^k Laurent coefficient of h_{s,p,d} on |beta| = 1.
For d <= 4 the residue sums collapse to the branch formulas in FLAT_PROFILES
(x = p^-s); every degree is also available from the contour integral

    p^(-lambda/2) / (2 pi i) * contour integral of h(beta) (beta^(lambda-1) - beta^(lambda+1)) dbeta

evaluated by the trapezoid rule.

Part of: whittaker_lab - p-adic Whittaker transform toolkit
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from configs.lab_settings import (
    CONTOUR_DEFAULT_NODES,
    CONTOUR_DOUBLING_TOLERANCE,
    CONTOUR_MAX_NODES,
    CONTOUR_MIN_NODES,
)
from src.common.errors import DivergenceError, DomainError, UnsupportedDegreeError
from src.common.models import DecayBound
from src.common.parallel import ordered_map
from src.lfactors.local_factors import (
    check_local_query,
    check_pole_clearance,
    contour_mean,
    lfactor_values,
    x_power,
)
from src.report.console import step, warning
from src.whittaker.spherical import p_half_power

# exponent = slope * lambda + offset
LinearExponent = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class FlatBranch:
    """Closed form on one residue class of lambda; lead None means the branch vanishes"""
    residue: int
    lead: Optional[LinearExponent] = None
    tail: Optional[LinearExponent] = None

    @property
    def vanishes(self) -> bool:
        return self.lead is None

    def exponents(self, lam: int) -> Tuple[Optional[float], Optional[float]]:
        def at(form: Optional[LinearExponent]) -> Optional[float]:
            if form is None:
                return None
            return float(form[0] * lam + form[1])
        return at(self.lead), at(self.tail)


@dataclass(frozen=True)
class FlatProfile:
    """
    Branch table of the closed-form inverse transform for one degree d

    value(lambda) = p^(-lambda/2) (x^lead - x^tail) / prod_k (1 - x^k)
    """
    d: int
    modulus: int
    branches: Tuple[FlatBranch, ...]
    denominator: Tuple[int, ...] = field(default_factory=tuple)

    def branch(self, lam: int) -> FlatBranch:
        return self.branches[lam % self.modulus]

    def covers_all_residues(self) -> bool:
        return sorted(b.residue for b in self.branches) == list(range(self.modulus))

    def evaluate(self, lam: int, p: int, s: complex) -> complex:
        if lam < 0:
            return 0j
        branch = self.branch(lam)
        if branch.vanishes:
            return 0j
        lead, tail = branch.exponents(lam)
        numerator = x_power(s, p, lead)
        if tail is not None:
            numerator -= x_power(s, p, tail)
        if numerator == 0:
            return 0j
        denominator = 1.0 + 0j
        for k in self.denominator:
            denominator *= 1.0 - x_power(s, p, float(k))
        return p_half_power(p, -lam) * numerator / denominator

    def decay_constant(self, p: int, s: complex) -> float:
        """C with |value(lambda)| <= C p^(-lambda/2) |p^-s|^(lambda/d)"""
        denominator = 1.0
        for k in self.denominator:
            denominator *= abs(1.0 - x_power(s, p, float(k)))
        terms = 2.0 if any(b.tail is not None for b in self.branches) else 1.0
        return terms / denominator


def _f(numerator: int, denominator: int = 1) -> Fraction:
    return Fraction(numerator, denominator)


FLAT_PROFILES: Dict[int, FlatProfile] = {
    1: FlatProfile(
        d=1, modulus=1,
        branches=(FlatBranch(0, lead=(_f(1), _f(0))),),
    ),
    2: FlatProfile(
        d=2, modulus=2,
        branches=(FlatBranch(0, lead=(_f(1, 2), _f(0))), FlatBranch(1)),
        denominator=(2,),
    ),
    3: FlatProfile(
        d=3, modulus=3,
        branches=(
            FlatBranch(0, lead=(_f(1, 3), _f(0)), tail=(_f(1), _f(2))),
            FlatBranch(1, lead=(_f(1, 3), _f(8, 3)), tail=(_f(1), _f(2))),
            FlatBranch(2, lead=(_f(1, 3), _f(4, 3)), tail=(_f(1), _f(2))),
        ),
        denominator=(2, 4),
    ),
    4: FlatProfile(
        d=4, modulus=4,
        branches=(
            FlatBranch(0, lead=(_f(1, 4), _f(0)), tail=(_f(1, 2), _f(1))),
            FlatBranch(1),
            FlatBranch(2, lead=(_f(1, 4), _f(3, 2)), tail=(_f(1, 2), _f(1))),
            FlatBranch(3),
        ),
        denominator=(1, 2, 3),
    ),
}


def flat_profile(d: int) -> FlatProfile:
    """
    Raises:
        UnsupportedDegreeError: no closed form for this degree
    """
    if d not in FLAT_PROFILES:
        raise UnsupportedDegreeError(
            f"No closed form for Sym^{d}; use lfactor_flat_numeric",
            details={'d': d},
        )
    return FLAT_PROFILES[d]


def lfactor_flat_closed(d: int, lam: int, p: int, s: complex) -> complex:
    """
    Closed-form (h_{s,p,d})_flat at |t_1|_p = p^-lam for d in 1..4

    Examples:
        d=1, p=2, s=1, lam=2     -> 0.125
        d=2, lam odd             -> 0
        d=3, p=2, s=2.5, lam=1   -> 0
    """
    profile = flat_profile(d)
    check_local_query(d, p, s)
    return profile.evaluate(lam, p, complex(s))


def flat_integrand(d: int, lam: int, p: int, s: complex):
    """beta -> h_{s,p,d}(beta) (beta^lam - beta^(lam+2)), the contour integrand times dbeta/beta"""
    def integrand(beta: np.ndarray) -> np.ndarray:
        return lfactor_values(d, s, p, beta) * (beta ** lam - beta ** (lam + 2))
    return integrand


def lfactor_flat_numeric(d: int, lam: int, p: int, s: complex, N: Optional[int] = None) -> complex:
    """
    Trapezoid-rule (h_{s,p,d})_flat for any degree

    A given N is used as is (N >= 64). Without N the rule starts at 512
    nodes and doubles until successive values agree to 1e-10 or N = 8192.

    Raises:
        ConditioningError: a pole ring within 1e-6 of the unit circle
    """
    check_local_query(d, p, s)
    if N is not None and N < CONTOUR_MIN_NODES:
        raise DomainError(f"Contour quadrature needs N >= {CONTOUR_MIN_NODES}, got {N}")
    check_pole_clearance(d, s, p)
    if lam < 0:
        return 0j

    integrand = flat_integrand(d, lam, p, s)
    scale = p_half_power(p, -lam)
    if N is not None:
        return scale * contour_mean(integrand, N)

    nodes = CONTOUR_DEFAULT_NODES
    value = contour_mean(integrand, nodes)
    while nodes < CONTOUR_MAX_NODES:
        nodes *= 2
        refined = contour_mean(integrand, nodes)
        settled = abs(refined - value) < CONTOUR_DOUBLING_TOLERANCE
        value = refined
        if settled:
            break
    else:
        warning(f"Contour rule for Sym^{d}, lambda={lam} not settled at N={nodes}")
    return scale * value


def substitution_defect(d: int, lam: int, p: int, s: complex, N: int = CONTOUR_DEFAULT_NODES) -> float:
    """
    |Q(beta^-(lam+1)) + Q(beta^(lam+1))| for Q(g) = (1/2 pi i) contour integral of
    h(beta) g(beta) (beta^-1 - beta) dbeta / beta

    Vanishes when h is invariant under beta -> 1/beta.
    """
    check_local_query(d, p, s)
    check_pole_clearance(d, s, p)

    def inner(beta: np.ndarray) -> np.ndarray:
        return lfactor_values(d, s, p, beta) * beta ** -(lam + 1) * (1.0 / beta - beta)

    def outer(beta: np.ndarray) -> np.ndarray:
        return lfactor_values(d, s, p, beta) * beta ** (lam + 1) * (1.0 / beta - beta)

    return abs(contour_mean(inner, N) + contour_mean(outer, N))


def flat_decay(d: int, p: int, s: complex, eta: float = 0.0) -> DecayBound:
    """
    Decay of the closed forms: |flat(lambda)| <= C delta^(1/2) p^(-(eta + epsilon0) lambda)

    with epsilon0 = Re(s)/d - eta, for Satake parameters in the annulus p^eta.

    Raises:
        UnsupportedDegreeError: d outside 1..4
        DivergenceError: Re(s)/d <= eta leaves no decay margin
    """
    profile = flat_profile(d)
    epsilon0 = complex(s).real / d - eta
    if epsilon0 <= 0:
        raise DivergenceError(
            f"Re(s)/d = {complex(s).real / d:.6g} does not exceed eta = {eta}",
            details={'d': d, 's': complex(s), 'eta': eta},
        )
    return DecayBound(constant=profile.decay_constant(p, complex(s)), eta=eta, epsilon0=epsilon0)


@dataclass(frozen=True)
class LFactorRow:
    """One row of an L-factor table; closed is None without a closed form"""
    lam: int
    closed: Optional[complex]
    numeric: complex

    @property
    def difference(self) -> Optional[float]:
        if self.closed is None:
            return None
        return abs(self.closed - self.numeric)

    @property
    def cross_checked(self) -> bool:
        return self.closed is not None

    def to_dict(self) -> Dict:
        return {
            'lambda': self.lam,
            'closed': self.closed,
            'numeric': self.numeric,
            'abs_diff': self.difference,
            'cross_checked': self.cross_checked,
        }


def lfactor_table(d: int, p: int, s: complex, lambda_max: int,
                  N: Optional[int] = None, verbose: bool = False) -> List[LFactorRow]:
    """Closed and numeric flat values for lambda = 0..lambda_max"""
    check_local_query(d, p, s)
    has_closed = d in FLAT_PROFILES
    if verbose:
        step(f"Tabulating Sym^{d} at p={p}, s={s} for lambda <= {lambda_max}")
        if not has_closed:
            warning(f"Sym^{d}: no closed-form cross-check")

    def row(lam: int) -> LFactorRow:
        closed = lfactor_flat_closed(d, lam, p, s) if has_closed else None
        return LFactorRow(lam=lam, closed=closed, numeric=lfactor_flat_numeric(d, lam, p, s, N))

    return ordered_map(row, range(lambda_max + 1))


__all__ = [
    'FlatBranch',
    'FlatProfile',
    'FLAT_PROFILES',
    'flat_profile',
    'lfactor_flat_closed',
    'flat_integrand',
    'lfactor_flat_numeric',
    'substitution_defect',
    'flat_decay',
    'LFactorRow',
    'lfactor_table',
]
