"""
Geometric and Spectral Function Containers

CompactFunction   finitely supported h on the valuation cone Z_{>=0}^{n-1}
SpectralFunction  H on the torus, either an exact Laurent polynomial or a
                  vectorized black-box evaluator

Part of: whittaker_lab - p-adic Whittaker transform toolkit
"""

from typing import Callable, ClassVar, Dict, Iterable, Optional, Tuple, Type

import numpy as np
from pydantic import field_validator, model_validator

from configs.lab_settings import (
    SYMMETRY_SAMPLE_PERMUTATIONS,
    SYMMETRY_SAMPLE_POINTS,
    SYMMETRY_SEED,
    SYMMETRY_TOLERANCE,
)
from src.algebra.laurent import LaurentPoly
from src.common.errors import ContractError, DimensionError, SupportError, WhittakerLabError
from src.common.models import LabModel, PrimeContext
from src.symmetric.partitions import cube_indices

TorusEvaluator = Callable[[np.ndarray], np.ndarray]


class CompactFunction(LabModel):
    """
    Finitely supported function on valuation vectors

    Usage:
        ctx = PrimeContext(p=2, n=3)
        h = CompactFunction(values={(0, 0): 1.0, (1, 2): 0.5j}, ctx=ctx)
        h((1, 2))      # 0.5j
        h((3, 3))      # 0
    """
    error_class: ClassVar[Type[WhittakerLabError]] = SupportError

    values: Dict[Tuple[int, ...], complex]
    ctx: PrimeContext

    @field_validator('values', mode='before')
    @classmethod
    def _normalize_keys(cls, value):
        if isinstance(value, dict):
            return {tuple(int(x) for x in key): complex(c) for key, c in value.items()}
        return value

    @model_validator(mode='after')
    def _cone(self) -> 'CompactFunction':
        for key in self.values:
            if len(key) != self.ctx.nvars:
                raise ValueError(f"valuation {key} has length {len(key)}, expected {self.ctx.nvars}")
            if any(k < 0 for k in key):
                raise ValueError(f"valuation {key} lies outside the cone v_k >= 0")
        return self

    @classmethod
    def from_function(cls, fn: Callable[[Tuple[int, ...]], complex], ctx: PrimeContext, side: int) -> 'CompactFunction':
        """Tabulate fn on the cube 0 <= v_k <= side"""
        return cls(values={v: fn(v) for v in cube_indices(ctx.n, side)}, ctx=ctx)

    @classmethod
    def indicator(cls, v: Iterable[int], ctx: PrimeContext, value: complex = 1.0) -> 'CompactFunction':
        return cls(values={tuple(v): value}, ctx=ctx)

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def support(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(sorted(self.values))

    def items(self) -> Tuple[Tuple[Tuple[int, ...], complex], ...]:
        return tuple(sorted(self.values.items()))

    def __call__(self, v: Iterable[int]) -> complex:
        return self.values.get(tuple(v), 0j)

    def max_abs_difference(self, other: 'CompactFunction') -> float:
        keys = set(self.values) | set(other.values)
        return max((abs(self(k) - other(k)) for k in keys), default=0.0)

    def to_rows(self) -> Tuple[Dict, ...]:
        return tuple({'v': list(k), 'value': c} for k, c in self.items())


class SpectralFunction:
    """
    Symmetric function of the torus point (beta_1, ..., beta_{n-1})

    Exactly one of `exact` or `evaluator` is given. Evaluators take a
    (K, n-1) complex array and return K values. `symmetric` declares
    invariance under permutations of the full alphabet
    (beta_1, ..., beta_{n-1}, 1/(beta_1 ... beta_{n-1})).
    """

    def __init__(self,
                 ctx: PrimeContext,
                 *,
                 exact: Optional[LaurentPoly] = None,
                 evaluator: Optional[TorusEvaluator] = None,
                 symmetric: bool = False,
                 label: str = ""):
        if (exact is None) == (evaluator is None):
            raise ContractError("Give exactly one of an exact polynomial or an evaluator")
        if exact is not None and exact.rank != ctx.n:
            raise DimensionError(
                f"Polynomial rank {exact.rank} does not match context rank {ctx.n}",
                details={'rank': exact.rank, 'n': ctx.n},
            )
        self.ctx = ctx
        self.exact = exact
        self.evaluator = evaluator
        self.symmetric = symmetric
        self.label = label
        self._symmetry_verified = False

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    @property
    def n(self) -> int:
        return self.ctx.n

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=complex).reshape(-1, self.ctx.nvars)
        if self.exact is not None:
            return self.exact.evaluate_many(points)
        return np.asarray(self.evaluator(points), dtype=complex).reshape(points.shape[0])

    def __call__(self, point: Iterable[complex]) -> complex:
        return complex(self.evaluate(np.asarray([tuple(point)], dtype=complex))[0])

    def symmetry_defect(self,
                        samples: int = SYMMETRY_SAMPLE_POINTS,
                        permutations: int = SYMMETRY_SAMPLE_PERMUTATIONS,
                        seed: int = SYMMETRY_SEED) -> float:
        """Largest relative change under sampled permutations of the full alphabet"""
        rng = np.random.default_rng(seed)
        n = self.ctx.n
        angles = rng.uniform(0.0, 2.0 * np.pi, size=(samples, n - 1))
        beta = np.exp(1j * angles)
        alphabet = np.concatenate([beta, 1.0 / np.prod(beta, axis=1, keepdims=True)], axis=1)
        base = self.evaluate(beta)
        scale = np.maximum(1.0, np.abs(base))

        worst = 0.0
        for _ in range(permutations):
            order = rng.permutation(n)
            moved = self.evaluate(alphabet[:, order][:, :n - 1])
            worst = max(worst, float(np.max(np.abs(moved - base) / scale)))
        return worst

    def ensure_symmetric(self, tolerance: float = SYMMETRY_TOLERANCE) -> None:
        """
        Raise ContractError unless the function is symmetric

        Exact polynomials are always sampled; evaluators are sampled only
        when they do not declare symmetry.
        """
        if self._symmetry_verified or (self.evaluator is not None and self.symmetric):
            return
        defect = self.symmetry_defect()
        if defect > tolerance:
            name = f" '{self.label}'" if self.label else ""
            raise ContractError(
                f"Spectral function{name} is not symmetric (defect {defect:.3g})",
                details={'defect': defect, 'tolerance': tolerance},
            )
        self._symmetry_verified = True

    def __repr__(self) -> str:
        kind = f"exact, {len(self.exact)} terms" if self.exact is not None else "evaluator"
        return f"SpectralFunction({kind}, n={self.ctx.n}{', ' + self.label if self.label else ''})"


__all__ = [
    'TorusEvaluator',
    'CompactFunction',
    'SpectralFunction',
]
