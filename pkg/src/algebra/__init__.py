"""
Laurent Polynomial Algebra

Exact (up to roundoff) arithmetic in the torus variables and the
constant-term functional.
"""

from .laurent import (
    Exponent,
    LaurentPoly,
    lp_add,
    lp_constant,
    lp_constant_term,
    lp_conjugate_inverted,
    lp_eval,
    lp_eval_many,
    lp_monomial,
    lp_mul,
    lp_neg,
    lp_pairing,
    lp_scale,
    lp_spread,
    lp_sub,
    lp_variable,
)

__all__ = [
    'Exponent',
    'LaurentPoly',
    'lp_add',
    'lp_constant',
    'lp_constant_term',
    'lp_conjugate_inverted',
    'lp_eval',
    'lp_eval_many',
    'lp_monomial',
    'lp_mul',
    'lp_neg',
    'lp_pairing',
    'lp_scale',
    'lp_spread',
    'lp_sub',
    'lp_variable',
]
