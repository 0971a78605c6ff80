"""
Error Hierarchy

Every precondition, conditioning and divergence failure raised by the
library. All errors subclass ValueError so callers that only guard for
ValueError keep working.

Part of: whittaker_lab - p-adic Whittaker transform toolkit
"""

from typing import Any, Dict, Optional


class WhittakerLabError(ValueError):
    """Base class for all library errors"""
    code = "whittaker_lab_error"
    exit_code = 2

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """Structured form used by the CLI error document"""
        return {
            'error': self.code,
            'message': self.message,
            'details': {k: _plain(v) for k, v in self.details.items()},
        }


class DimensionError(WhittakerLabError):
    """Operands live in different rank contexts"""
    code = "dimension_mismatch"


class EvaluationError(WhittakerLabError):
    """A Laurent polynomial cannot be evaluated at the requested point"""
    code = "evaluation_error"


class ConditioningError(WhittakerLabError):
    """Inputs are too close to a degenerate configuration for the chosen method"""
    code = "ill_conditioned"


class OracleTooLargeError(WhittakerLabError):
    """Combinatorial enumeration guard exceeded"""
    code = "oracle_too_large"


class SupportError(WhittakerLabError):
    """Valuation vector outside the support cone"""
    code = "outside_support"


class ContextError(WhittakerLabError):
    """Invalid prime / rank context"""
    code = "invalid_context"


class DomainError(WhittakerLabError):
    """Parameters outside the convergence or evaluation domain"""
    code = "outside_domain"


class PoleError(WhittakerLabError):
    """A closed form is evaluated at (or numerically on) a pole"""
    code = "pole"


class ContractError(WhittakerLabError):
    """Caller contract (symmetry, declared decay, ...) not satisfied"""
    code = "contract_violation"


class UnsupportedDegreeError(WhittakerLabError):
    """No closed form exists for the requested symmetric-power degree"""
    code = "unsupported_degree"


class DivergenceError(WhittakerLabError):
    """A series was detected not to converge"""
    code = "divergence"
    exit_code = 3


class ConfigurationError(WhittakerLabError):
    """Invalid runtime configuration (environment variables)"""
    code = "configuration_error"


def _plain(value: Any) -> Any:
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


__all__ = [
    'WhittakerLabError',
    'DimensionError',
    'EvaluationError',
    'ConditioningError',
    'OracleTooLargeError',
    'SupportError',
    'ContextError',
    'DomainError',
    'PoleError',
    'ContractError',
    'UnsupportedDegreeError',
    'DivergenceError',
    'ConfigurationError',
]
