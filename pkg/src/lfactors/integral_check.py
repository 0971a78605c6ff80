"""
Integral Representation Check

    L_p(s, Sym^d) = integral over Q_p^x of (h_{s,p,d})_flat(t) W_alpha(t) d^x t

evaluated as a truncated forward transform at rank 2 and compared with
the Euler product.

Part of: whittaker_lab - p-adic Whittaker transform toolkit
"""

import math
from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np

from configs.lab_settings import DEFAULT_TRUNCATION
from src.common.errors import DivergenceError
from src.common.models import DecayBound, LFactorQuery, PrimeContext
from src.common.parallel import ordered_map
from src.lfactors.flat_profiles import FLAT_PROFILES, flat_decay, lfactor_flat_closed, lfactor_flat_numeric
from src.lfactors.local_factors import local_lfactor
from src.report.console import step, warning
from src.transform.forward import forward_transform_series
from src.whittaker.spherical import p_half_power

_NOISE_FLOOR = 1e-15


@dataclass
class IntegralCheckReport:
    """Outcome of one integral-representation comparison"""
    d: int
    p: int
    s: complex
    alpha: complex
    truncation: int
    lfactor: complex
    series_value: Optional[complex] = None
    discrepancy: Optional[float] = None
    truncation_bound: float = math.inf
    roundoff_bound: float = 0.0
    closed_form: bool = True
    diverged: bool = False
    message: str = ""

    @property
    def tail_bound(self) -> float:
        return self.truncation_bound + self.roundoff_bound

    @property
    def passed(self) -> bool:
        return (not self.diverged and self.discrepancy is not None
                and self.discrepancy <= self.tail_bound)

    def to_dict(self) -> Dict:
        return {
            'd': self.d,
            'p': self.p,
            's': self.s,
            'alpha': self.alpha,
            'M': self.truncation,
            'lfactor': self.lfactor,
            'series_value': self.series_value,
            'discrepancy': self.discrepancy,
            'truncation_bound': self.truncation_bound,
            'roundoff_bound': self.roundoff_bound,
            'tail_bound': self.tail_bound,
            'closed_form': self.closed_form,
            'diverged': self.diverged,
            'passed': self.passed,
            'message': self.message,
        }


def _annulus_eta(alpha: complex, p: int) -> float:
    """Smallest eta with alpha and 1/alpha inside the annulus p^eta"""
    return abs(math.log(abs(alpha))) / math.log(p)


def _empirical_decay(values: np.ndarray, p: int, s: complex, d: int, eta: float) -> DecayBound:
    """Decay constant fitted to tabulated numeric values (no closed form available)"""
    epsilon0 = complex(s).real / d - eta
    if epsilon0 <= 0:
        raise DivergenceError(
            f"Re(s)/d = {complex(s).real / d:.6g} leaves no decay margin over eta = {eta:.6g}",
            details={'d': d, 's': complex(s), 'eta': eta},
        )
    lams = np.arange(values.size)
    envelope = np.array([p_half_power(p, -int(lam)) for lam in lams]) * float(p) ** (-(eta + epsilon0) * lams)
    ratios = np.abs(values) / envelope
    return DecayBound(constant=float(np.max(ratios)) * (1 + 1e-9), eta=eta, epsilon0=epsilon0)


def verify_integral_representation(q: LFactorQuery,
                                   M: int = DEFAULT_TRUNCATION,
                                   eta: Optional[float] = None,
                                   N: Optional[int] = None,
                                   verbose: bool = False) -> IntegralCheckReport:
    """
    Compare the truncated forward transform of the flat L-factor kernel with L_p(s, Sym^d)

    Uses the closed forms for d <= 4 and the contour oracle otherwise.
    Series that cannot be certified to converge come back with
    diverged=True instead of raising.
    """
    eta = _annulus_eta(q.alpha, q.p) if eta is None else eta
    ctx = PrimeContext(p=q.p, n=2)
    report = IntegralCheckReport(d=q.d, p=q.p, s=q.s, alpha=q.alpha, truncation=M,
                                 lfactor=local_lfactor(q), closed_form=q.d in FLAT_PROFILES)
    alpha = (q.alpha, 1.0 / q.alpha)

    def closed_kernel(v):
        return lfactor_flat_closed(q.d, v[0], q.p, q.s)

    try:
        if report.closed_form:
            decay = flat_decay(q.d, q.p, q.s, eta)
            hval = closed_kernel
        else:
            if verbose:
                step(f"[0/2] Tabulating numeric kernel for Sym^{q.d} up to lambda={M}")
                warning(f"Sym^{q.d}: no closed-form cross-check")
            values = np.asarray(ordered_map(lambda lam: lfactor_flat_numeric(q.d, lam, q.p, q.s, N),
                                            range(M + 1)), dtype=complex)
            values[np.abs(values) <= _NOISE_FLOOR * max(1.0, float(np.max(np.abs(values))))] = 0
            decay = _empirical_decay(values, q.p, q.s, q.d, eta)
            hval = lambda v: complex(values[v[0]])

        result = forward_transform_series(hval, alpha, eta, M, ctx=ctx, decay=decay, verbose=verbose)
    except DivergenceError as exc:
        report.diverged = True
        report.message = exc.message
        return report

    report.series_value = result.value
    report.discrepancy = abs(result.value - report.lfactor)
    report.truncation_bound = result.truncation_bound
    report.roundoff_bound = result.roundoff_bound
    if not report.closed_form:
        report.message = "no closed-form cross-check"
    return report


__all__ = [
    'IntegralCheckReport',
    'verify_integral_representation',
]
