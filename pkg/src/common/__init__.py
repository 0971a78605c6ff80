"""
Shared Infrastructure

Error hierarchy, validated models, document models and their loader,
worker pool and the truncated-series bookkeeping.
"""

from .errors import (
    ConditioningError,
    ConfigurationError,
    ContextError,
    ContractError,
    DimensionError,
    DivergenceError,
    DomainError,
    EvaluationError,
    OracleTooLargeError,
    PoleError,
    SupportError,
    UnsupportedDegreeError,
    WhittakerLabError,
)
from .models import (
    DecayBound,
    LabModel,
    LabSettings,
    LFactorQuery,
    PrimeContext,
    RegularizedPairingParams,
    SpectralParams,
    is_prime,
    load_settings,
)
from .documents import GoldenEntry, GoldenValues, JobInputs, JobSpec, ReportDocument
from .json_loader import JsonLoader
from .parallel import ordered_map, spawn_generators, tree_sum, worker_pool
from .series import TruncatedSum

__all__ = [
    'ConditioningError',
    'ConfigurationError',
    'ContextError',
    'ContractError',
    'DimensionError',
    'DivergenceError',
    'DomainError',
    'EvaluationError',
    'OracleTooLargeError',
    'PoleError',
    'SupportError',
    'UnsupportedDegreeError',
    'WhittakerLabError',
    'DecayBound',
    'LabModel',
    'LabSettings',
    'LFactorQuery',
    'PrimeContext',
    'RegularizedPairingParams',
    'SpectralParams',
    'is_prime',
    'load_settings',
    'GoldenEntry',
    'GoldenValues',
    'JobInputs',
    'JobSpec',
    'ReportDocument',
    'JsonLoader',
    'ordered_map',
    'spawn_generators',
    'tree_sum',
    'worker_pool',
    'TruncatedSum',
]
