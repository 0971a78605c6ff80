"""
Symmetric-Power L-Factors

Local Euler factors, closed-form and contour inverse transforms at
rank 2, and the integral-representation check.
"""

from .local_factors import (
    contour_mean,
    lfactor_spectral,
    lfactor_values,
    local_lfactor,
    pole_radii,
)
from .flat_profiles import (
    FLAT_PROFILES,
    FlatProfile,
    LFactorRow,
    flat_decay,
    flat_profile,
    lfactor_flat_closed,
    lfactor_flat_numeric,
    lfactor_table,
    substitution_defect,
)
from .integral_check import IntegralCheckReport, verify_integral_representation

__all__ = [
    'contour_mean',
    'lfactor_spectral',
    'lfactor_values',
    'local_lfactor',
    'pole_radii',
    'FLAT_PROFILES',
    'FlatProfile',
    'LFactorRow',
    'flat_decay',
    'flat_profile',
    'lfactor_flat_closed',
    'lfactor_flat_numeric',
    'lfactor_table',
    'substitution_defect',
    'IntegralCheckReport',
    'verify_integral_representation',
]
