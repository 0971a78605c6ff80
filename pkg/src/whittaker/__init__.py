"""
Spherical Whittaker Functions

Shintani's formula on the torus lattice, numerically and as Laurent
polynomials for the inverse transform.
"""

from .spherical import (
    ValuationVector,
    delta,
    delta_half,
    modular_exponent,
    torus_point_to_alphabet,
    whittaker_eval,
    whittaker_grid,
    whittaker_laurent,
)
from src.common.models import PrimeContext, is_prime

__all__ = [
    'ValuationVector',
    'PrimeContext',
    'is_prime',
    'delta',
    'delta_half',
    'modular_exponent',
    'torus_point_to_alphabet',
    'whittaker_eval',
    'whittaker_grid',
    'whittaker_laurent',
]
