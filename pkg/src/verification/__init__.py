"""
Verification Suites

Seeded identity checks and the report structures they fill.
"""

from .suite_report import CheckResult, CheckStatus, SuiteReport, relative_error
from .suites import (
    verify_cauchy,
    verify_inversion,
    verify_lfactor,
    verify_plancherel,
    verify_stade,
)
from .golden import evaluate_golden, verify_golden

__all__ = [
    'CheckResult',
    'CheckStatus',
    'SuiteReport',
    'relative_error',
    'verify_cauchy',
    'verify_inversion',
    'verify_lfactor',
    'verify_plancherel',
    'verify_stade',
    'evaluate_golden',
    'verify_golden',
]
