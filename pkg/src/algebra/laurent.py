"""
Laurent Polynomials on the Torus

Multivariate Laurent polynomials with complex coefficients in the torus
variables beta_1, ..., beta_{n-1}. Values are immutable; every ring
operation returns a new polynomial with near-zero coefficients pruned.

The constant-term functional is the normalized torus integral
(1/(2 pi i))^{n-1} * integral of f dbeta/beta.

Part of: whittaker_lab - p-adic Whittaker transform toolkit
"""

from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Optional, Tuple

import numpy as np

from configs.lab_settings import PRUNE_RELATIVE
from src.common.errors import DimensionError, EvaluationError

Exponent = Tuple[int, ...]

_EVAL_CHUNK = 4096


class LaurentPoly:
    """
    Finitely supported map Exponent -> complex, in n - 1 variables

    `rank` is the number n of spectral variables before the substitution
    beta_n = 1 / (beta_1 ... beta_{n-1}); exponents have length n - 1.

    Usage:
        b1 = lp_variable(0, rank=2)
        poly = b1 + b1 ** -1          # beta_1 + beta_1^-1
        poly.constant_term()          # 0
        poly.evaluate((1j,))          # 0
    """

    __slots__ = ('_terms', '_rank')

    def __init__(self,
                 terms: Mapping[Exponent, complex],
                 rank: int,
                 *,
                 prune_scale: Optional[float] = None):
        """
        Args:
            terms: exponent tuple -> coefficient
            rank: n (exponent length is n - 1)
            prune_scale: magnitude the relative prune threshold refers to;
                defaults to the largest coefficient in `terms`
        """
        if rank < 2:
            raise DimensionError(f"Laurent rank must be >= 2, got {rank}")
        nvars = rank - 1
        clean: Dict[Exponent, complex] = {}
        for key, coeff in terms.items():
            exponent = tuple(int(e) for e in key)
            if len(exponent) != nvars:
                raise DimensionError(
                    f"Exponent {exponent} has length {len(exponent)}, expected {nvars}",
                    details={'rank': rank},
                )
            clean[exponent] = clean.get(exponent, 0j) + complex(coeff)

        if prune_scale is None:
            prune_scale = max((abs(c) for c in clean.values()), default=0.0)
        threshold = PRUNE_RELATIVE * prune_scale
        self._terms = {k: c for k, c in clean.items() if abs(c) > threshold and c != 0}
        self._rank = rank

    # ------------------------------------------------------------------
    # Basic accessors
    # ------------------------------------------------------------------

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def nvars(self) -> int:
        return self._rank - 1

    @property
    def terms(self) -> Mapping[Exponent, complex]:
        return MappingProxyType(self._terms)

    @property
    def support(self) -> Tuple[Exponent, ...]:
        return tuple(sorted(self._terms))

    def is_zero(self) -> bool:
        return not self._terms

    def max_coefficient(self) -> float:
        return max((abs(c) for c in self._terms.values()), default=0.0)

    def coefficient(self, exponent: Iterable[int]) -> complex:
        return self._terms.get(tuple(exponent), 0j)

    def sorted_items(self) -> Tuple[Tuple[Exponent, complex], ...]:
        """Deterministic (exponent, coefficient) listing"""
        return tuple(sorted(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------

    def _check_rank(self, other: 'LaurentPoly') -> None:
        if other.rank != self.rank:
            raise DimensionError(
                f"Rank mismatch: {self.rank} vs {other.rank}",
                details={'left': self.rank, 'right': other.rank},
            )

    def _coerce(self, other) -> 'LaurentPoly':
        if isinstance(other, LaurentPoly):
            self._check_rank(other)
            return other
        if isinstance(other, (int, float, complex, np.number)):
            return lp_constant(complex(other), self.rank)
        return NotImplemented

    def __add__(self, other) -> 'LaurentPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        merged = dict(self._terms)
        for key, coeff in other._terms.items():
            merged[key] = merged.get(key, 0j) + coeff
        scale = max(self.max_coefficient(), other.max_coefficient())
        return LaurentPoly(merged, self.rank, prune_scale=scale)

    __radd__ = __add__

    def __neg__(self) -> 'LaurentPoly':
        return LaurentPoly({k: -c for k, c in self._terms.items()}, self.rank)

    def __sub__(self, other) -> 'LaurentPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> 'LaurentPoly':
        return (-self) + other

    def __mul__(self, other) -> 'LaurentPoly':
        if isinstance(other, (int, float, complex, np.number)):
            c = complex(other)
            return LaurentPoly({k: c * v for k, v in self._terms.items()}, self.rank)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _convolve(self, other)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> 'LaurentPoly':
        if not isinstance(power, int):
            return NotImplemented
        if power < 0:
            if len(self._terms) != 1:
                raise EvaluationError("Only monomials have Laurent inverses")
            (key, coeff), = self._terms.items()
            return LaurentPoly({tuple(power * e for e in key): coeff ** power}, self.rank)
        result = lp_constant(1.0, self.rank)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def almost_equal(self, other: 'LaurentPoly', tol: float = 1e-12) -> bool:
        """Coefficientwise agreement up to tol relative to the larger polynomial"""
        self._check_rank(other)
        scale = max(self.max_coefficient(), other.max_coefficient(), 1e-300)
        keys = set(self._terms) | set(other._terms)
        return all(abs(self.coefficient(k) - other.coefficient(k)) <= tol * scale for k in keys)

    # ------------------------------------------------------------------
    # Functionals
    # ------------------------------------------------------------------

    def constant_term(self) -> complex:
        return self._terms.get((0,) * self.nvars, 0j)

    def evaluate(self, point: Iterable[complex]) -> complex:
        point = tuple(complex(x) for x in point)
        if len(point) != self.nvars:
            raise DimensionError(f"Point has {len(point)} coordinates, expected {self.nvars}")
        total = 0j
        for key, coeff in self._terms.items():
            term = coeff
            for x, e in zip(point, key):
                if x == 0 and e < 0:
                    raise EvaluationError(
                        "Negative exponent at a zero coordinate",
                        details={'exponent': list(key)},
                    )
                term *= x ** e
            total += term
        return total

    def evaluate_many(self, points: np.ndarray) -> np.ndarray:
        """Vectorized evaluation on a (K, n-1) array of points"""
        points = np.asarray(points, dtype=complex)
        if points.ndim == 1:
            points = points.reshape(-1, self.nvars)
        if points.shape[1] != self.nvars:
            raise DimensionError(f"Points have {points.shape[1]} coordinates, expected {self.nvars}")
        if not self._terms:
            return np.zeros(points.shape[0], dtype=complex)

        exponents, coeffs = self.as_arrays()
        negative_axes = np.any(exponents < 0, axis=0)
        if np.any((points == 0) & negative_axes[None, :]):
            raise EvaluationError("Negative exponent at a zero coordinate")

        out = np.empty(points.shape[0], dtype=complex)
        for start in range(0, points.shape[0], _EVAL_CHUNK):
            chunk = points[start:start + _EVAL_CHUNK]
            monomials = np.prod(chunk[:, None, :] ** exponents[None, :, :], axis=2)
            out[start:start + _EVAL_CHUNK] = monomials @ coeffs
        return out

    def as_arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        """(exponents (T, n-1) int array, coefficients (T,) complex array), sorted"""
        items = self.sorted_items()
        if not items:
            return np.zeros((0, self.nvars), dtype=np.int64), np.zeros(0, dtype=complex)
        exponents = np.array([k for k, _ in items], dtype=np.int64).reshape(len(items), self.nvars)
        coeffs = np.array([c for _, c in items], dtype=complex)
        return exponents, coeffs

    def spread(self) -> Tuple[int, ...]:
        """Per-axis exponent spread (max - min); zeros for the empty polynomial"""
        if not self._terms:
            return (0,) * self.nvars
        exponents, _ = self.as_arrays()
        return tuple(int(v) for v in exponents.max(axis=0) - exponents.min(axis=0))

    def max_abs_exponent(self) -> int:
        if not self._terms:
            return 0
        return max(abs(e) for key in self._terms for e in key)

    def conjugate_inverted(self) -> 'LaurentPoly':
        """Coefficient conjugation composed with exponent negation"""
        return LaurentPoly(
            {tuple(-e for e in k): c.conjugate() for k, c in self._terms.items()},
            self.rank,
        )

    def __repr__(self) -> str:
        if not self._terms:
            return f"LaurentPoly(0, rank={self.rank})"
        shown = ", ".join(f"{k}: {c:.6g}" for k, c in self.sorted_items()[:8])
        more = "" if len(self._terms) <= 8 else f", ... ({len(self._terms)} terms)"
        return f"LaurentPoly({{{shown}{more}}}, rank={self.rank})"


def _convolve(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Distributive product: support is the Minkowski sum of the supports"""
    if a.is_zero() or b.is_zero():
        return LaurentPoly({}, a.rank)
    ea, ca = a.as_arrays()
    eb, cb = b.as_arrays()
    exps = (ea[:, None, :] + eb[None, :, :]).reshape(-1, a.nvars)
    coeffs = (ca[:, None] * cb[None, :]).reshape(-1)
    unique, inverse = np.unique(exps, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    real = np.bincount(inverse, weights=coeffs.real, minlength=len(unique))
    imag = np.bincount(inverse, weights=coeffs.imag, minlength=len(unique))
    summed = real + 1j * imag
    scale = a.max_coefficient() * b.max_coefficient()
    return LaurentPoly(
        {tuple(int(e) for e in row): c for row, c in zip(unique, summed)},
        a.rank,
        prune_scale=scale,
    )


# ============================================================================
# Constructors
# ============================================================================

def lp_constant(c: complex, rank: int) -> LaurentPoly:
    return LaurentPoly({(0,) * (rank - 1): complex(c)}, rank)


def lp_monomial(exponent: Iterable[int], rank: int, coeff: complex = 1.0) -> LaurentPoly:
    return LaurentPoly({tuple(exponent): complex(coeff)}, rank)


def lp_variable(index: int, rank: int) -> LaurentPoly:
    """beta_{index+1} as a polynomial"""
    exponent = [0] * (rank - 1)
    exponent[index] = 1
    return lp_monomial(exponent, rank)


# ============================================================================
# Functional API
# ============================================================================

def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    a._check_rank(b)
    return a + b


def lp_sub(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    a._check_rank(b)
    return a - b


def lp_neg(a: LaurentPoly) -> LaurentPoly:
    return -a


def lp_scale(a: LaurentPoly, c: complex) -> LaurentPoly:
    return a * complex(c)


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    a._check_rank(b)
    return a * b


def lp_constant_term(a: LaurentPoly) -> complex:
    return a.constant_term()


def lp_eval(a: LaurentPoly, point: Iterable[complex]) -> complex:
    return a.evaluate(point)


def lp_eval_many(a: LaurentPoly, points: np.ndarray) -> np.ndarray:
    return a.evaluate_many(points)


def lp_spread(a: LaurentPoly) -> Tuple[int, ...]:
    return a.spread()


def lp_conjugate_inverted(a: LaurentPoly) -> LaurentPoly:
    return a.conjugate_inverted()


def lp_pairing(a: LaurentPoly, b: LaurentPoly) -> complex:
    """Constant term of a*b, i.e. sum_k a_k * b_{-k}, without forming the product"""
    a._check_rank(b)
    small, large = (a, b) if len(a) <= len(b) else (b, a)
    terms = [c * large.coefficient(tuple(-e for e in k)) for k, c in small.sorted_items()]
    if not terms:
        return 0j
    return complex(np.sum(np.asarray(terms, dtype=complex)))


__all__ = [
    'Exponent',
    'LaurentPoly',
    'lp_constant',
    'lp_monomial',
    'lp_variable',
    'lp_add',
    'lp_sub',
    'lp_neg',
    'lp_scale',
    'lp_mul',
    'lp_constant_term',
    'lp_eval',
    'lp_eval_many',
    'lp_spread',
    'lp_conjugate_inverted',
    'lp_pairing',
]
