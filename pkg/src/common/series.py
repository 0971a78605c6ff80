"""
Truncated Lattice Sums and Shell Tail Bounds

Every infinite lattice sum in the toolkit is truncated to the cube
0 <= m_k <= M. An index outside the cube has partition size at least
M + 1, so the tail is bounded by summing a coefficientwise majorant
sum_N c_N r^N over the shells N >= M + 1.

Part of: whittaker_lab - p-adic Whittaker transform toolkit
"""

import math
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, Optional

import numpy as np

from configs.lab_settings import ROUNDOFF_RELATIVE, TAIL_MAX_SHELLS
from src.common.errors import DivergenceError

LogCoefficient = Callable[[int], float]

_NEGLIGIBLE = 1e-18
_EPS = float(np.finfo(float).eps)


@dataclass(frozen=True)
class TruncatedSum:
    """
    Partial sum over a truncation cube together with its error budget

    Unpacks as (value, tail_bound):
        value, bound = forward_transform_series(...)
    """
    value: complex
    truncation_bound: float
    roundoff_bound: float
    truncation: int
    terms: int

    @property
    def tail_bound(self) -> float:
        return self.truncation_bound + self.roundoff_bound

    def __iter__(self) -> Iterator:
        yield self.value
        yield self.tail_bound

    def to_dict(self) -> Dict:
        return {
            'value': self.value,
            'truncation': self.truncation,
            'terms': self.terms,
            'truncation_bound': self.truncation_bound,
            'roundoff_bound': self.roundoff_bound,
            'tail_bound': self.tail_bound,
        }


def _log_binomial(top: int, bottom: int) -> float:
    return math.lgamma(top + 1) - math.lgamma(bottom + 1) - math.lgamma(top - bottom + 1)


def binomial_log_coefficient(power: int, width: int = 1) -> LogCoefficient:
    """
    log of the x^N coefficient of (1 + x + ... + x^(width-1)) / (1 - x)^power

    With power = n^2 - 1 and width = n this is (1 - x^n)/(1 - x)^(n^2),
    the all-ones specialization of the Cauchy kernel; with width 1 and
    power = n + n(n-1)/2 it majorizes sum_m dim(m) x^|m|.
    """
    def log_coefficient(N: int) -> float:
        logs = [_log_binomial(N - j + power - 1, power - 1) for j in range(width) if N - j >= 0]
        if not logs:
            return -math.inf
        peak = max(logs)
        return peak + math.log(sum(math.exp(v - peak) for v in logs))
    return log_coefficient


def cauchy_log_coefficient(n: int) -> LogCoefficient:
    return binomial_log_coefficient(n * n - 1, width=n)


def forward_log_coefficient(n: int) -> LogCoefficient:
    return binomial_log_coefficient(n + n * (n - 1) // 2)


def shell_tail(log_coefficient: LogCoefficient, ratio: float, start: int) -> float:
    """
    Upper bound for sum_{N >= start} c_N * ratio^N

    Shells are summed until the terms decrease below 1e-18 of the running
    total; the remainder is then closed with the geometric bound of the
    current term ratio.

    Raises:
        DivergenceError: ratio >= 1, or the terms never settle
    """
    if ratio <= 0.0:
        return 0.0
    if ratio >= 1.0:
        raise DivergenceError(
            f"Tail ratio {ratio:.6g} is not below 1; the series does not converge",
            details={'ratio': ratio},
        )

    log_r = math.log(ratio)
    total = 0.0
    previous = math.inf
    for N in range(start, start + TAIL_MAX_SHELLS):
        term = math.exp(log_coefficient(N) + N * log_r)
        total += term
        if term < previous and term <= _NEGLIGIBLE * total:
            step = math.exp(log_coefficient(N + 1) - log_coefficient(N) + log_r)
            if step < 1.0:
                return total + term * step / (1.0 - step)
        previous = term
    raise DivergenceError(
        f"Tail bound did not settle within {TAIL_MAX_SHELLS} shells",
        details={'ratio': ratio, 'start': start},
    )


def roundoff_bound(magnitudes: np.ndarray, majorants: Optional[np.ndarray] = None) -> float:
    """Accumulated floating-point error of a pairwise sum of evaluated terms"""
    magnitudes = np.asarray(magnitudes, dtype=float)
    bound = 64.0 * _EPS * float(np.sum(magnitudes))
    if majorants is not None:
        bound = max(bound, ROUNDOFF_RELATIVE * float(np.sum(majorants)))
    return bound


__all__ = [
    'TruncatedSum',
    'LogCoefficient',
    'binomial_log_coefficient',
    'cauchy_log_coefficient',
    'forward_log_coefficient',
    'shell_tail',
    'roundoff_bound',
]
