"""
Validated Domain Models

pydantic models for every input-side value object: prime/rank context,
Satake parameters, L-factor queries, pairing and decay declarations,
and the runtime settings read from the environment.

Part of: whittaker_lab - p-adic Whittaker transform toolkit
"""

import math
import os
from typing import Any, ClassVar, Tuple, Type

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from configs.lab_settings import (
    DEFAULT_TRUNCATION,
    THREADS_ENV_VAR,
    UNIT_DETERMINANT_TOLERANCE,
)
from src.common.errors import (
    ConfigurationError,
    ContextError,
    ContractError,
    DomainError,
    WhittakerLabError,
)


def is_prime(p: int) -> bool:
    """Trial-division primality test (p is always desk-sized here)"""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    for d in range(3, math.isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


class LabModel(BaseModel):
    """
    Frozen model whose direct construction raises a library error

    model_validate() still raises pydantic.ValidationError; keyword
    construction re-raises it as `error_class` so numeric callers only
    deal with the WhittakerLabError hierarchy.
    """
    model_config = ConfigDict(frozen=True)

    error_class: ClassVar[Type[WhittakerLabError]] = DomainError

    def __init__(self, **data: Any):
        try:
            super().__init__(**data)
        except ValidationError as exc:
            problems = "; ".join(err['msg'] for err in exc.errors())
            raise self.error_class(
                f"Invalid {type(self).__name__}: {problems}",
                details={'input': {k: str(v) for k, v in data.items()}},
            ) from exc


class PrimeContext(LabModel):
    """Prime p and rank n shared by every geometric-side function"""
    error_class: ClassVar[Type[WhittakerLabError]] = ContextError

    p: int
    n: int

    @field_validator('p')
    @classmethod
    def _prime(cls, value: int) -> int:
        if not is_prime(value):
            raise ValueError(f"p must be prime, got {value}")
        return value

    @field_validator('n')
    @classmethod
    def _rank(cls, value: int) -> int:
        if value < 2:
            raise ValueError(f"rank n must be >= 2, got {value}")
        return value

    @property
    def nvars(self) -> int:
        """Number of torus coordinates (n - 1)"""
        return self.n - 1

    def log_p(self) -> float:
        return math.log(self.p)


class SpectralParams(LabModel):
    """
    Satake parameters alpha = (alpha_1, ..., alpha_n)

    With unit_determinant set, the product of the parameters must be 1.
    """
    alpha: Tuple[complex, ...]
    unit_determinant: bool = False

    @field_validator('alpha', mode='before')
    @classmethod
    def _coerce(cls, value: Any) -> Tuple[complex, ...]:
        if isinstance(value, str):
            value = [part for part in value.split(',') if part.strip()]
        return tuple(complex(str(v).replace(' ', '')) if isinstance(v, str) else complex(v)
                     for v in value)

    @field_validator('alpha')
    @classmethod
    def _nonzero(cls, value: Tuple[complex, ...]) -> Tuple[complex, ...]:
        if len(value) < 2:
            raise ValueError("at least two spectral parameters are required")
        if any(a == 0 for a in value):
            raise ValueError("spectral parameters must be nonzero")
        return value

    @model_validator(mode='after')
    def _determinant(self) -> 'SpectralParams':
        if self.unit_determinant and abs(self.product - 1) > UNIT_DETERMINANT_TOLERANCE:
            raise ValueError(f"product of parameters is {self.product}, expected 1")
        return self

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.alpha, dtype=complex)

    @property
    def product(self) -> complex:
        return complex(np.prod(self.array))

    @property
    def max_modulus(self) -> float:
        return float(np.max(np.abs(self.array)))

    def permuted(self, order) -> 'SpectralParams':
        return SpectralParams(alpha=tuple(self.alpha[i] for i in order),
                              unit_determinant=self.unit_determinant)

    def scaled(self, c: complex) -> 'SpectralParams':
        return SpectralParams(alpha=tuple(c * a for a in self.alpha))

    def reciprocal(self) -> 'SpectralParams':
        return SpectralParams(alpha=tuple(1 / a for a in self.alpha),
                              unit_determinant=self.unit_determinant)

    def in_annulus(self, p: int, eta: float) -> bool:
        """True when every |alpha_i| lies in [p^-eta, p^eta]"""
        bound = float(p) ** eta
        moduli = np.abs(self.array)
        return bool(np.all(moduli <= bound * (1 + 1e-12)) and np.all(moduli >= (1 - 1e-12) / bound))


class LFactorQuery(LabModel):
    """Symmetric-power local L-factor request (d, alpha, p, s) at rank 2"""
    d: int = Field(ge=1)
    alpha: complex
    p: int
    s: complex

    @field_validator('alpha')
    @classmethod
    def _nonzero(cls, value: complex) -> complex:
        if value == 0:
            raise ValueError("alpha must be nonzero")
        return value

    @field_validator('p')
    @classmethod
    def _prime(cls, value: int) -> int:
        if not is_prime(value):
            raise ValueError(f"p must be prime, got {value}")
        return value

    @field_validator('s')
    @classmethod
    def _half_plane(cls, value: complex) -> complex:
        if value.real <= 0:
            raise ValueError(f"Re(s) must be positive, got {value}")
        return value


class RegularizedPairingParams(LabModel):
    """epsilon-weight and cube truncation of the regularized Whittaker pairing"""
    epsilon: float = Field(default=0.0, ge=0.0)
    truncation: int = Field(default=DEFAULT_TRUNCATION, ge=0)


class DecayBound(LabModel):
    """
    Declared decay |h(v)| <= C * delta^(1/2)(v) * p^(-(eta + epsilon0) * sum (n-k) v_k)
    """
    error_class: ClassVar[Type[WhittakerLabError]] = ContractError

    constant: float = Field(ge=0.0)
    eta: float = Field(default=0.0, ge=0.0)
    epsilon0: float = Field(gt=0.0)

    @property
    def rate(self) -> float:
        return self.eta + self.epsilon0


class LabSettings(LabModel):
    """Runtime settings resolved from the environment"""
    error_class: ClassVar[Type[WhittakerLabError]] = ConfigurationError

    threads: int = Field(default=1, ge=1, le=256)


def load_settings() -> LabSettings:
    """Read WHITTAKER_LAB_THREADS (default 1)"""
    raw = os.environ.get(THREADS_ENV_VAR, "").strip()
    if not raw:
        return LabSettings()
    try:
        threads = int(raw)
    except ValueError as exc:
        raise ConfigurationError(
            f"{THREADS_ENV_VAR} must be a positive integer, got {raw!r}"
        ) from exc
    return LabSettings(threads=threads)


__all__ = [
    'is_prime',
    'LabModel',
    'PrimeContext',
    'SpectralParams',
    'LFactorQuery',
    'RegularizedPairingParams',
    'DecayBound',
    'LabSettings',
    'load_settings',
]
