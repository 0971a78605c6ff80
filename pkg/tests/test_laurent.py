import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.algebra.laurent import (
    LaurentPoly,
    lp_add,
    lp_constant,
    lp_constant_term,
    lp_conjugate_inverted,
    lp_eval,
    lp_monomial,
    lp_mul,
    lp_pairing,
    lp_spread,
    lp_variable,
)
from src.common.errors import DimensionError, EvaluationError


@st.composite
def small_polys(draw, rank=3):
    """Integer coefficients keep every ring law exact in floating point"""
    nvars = rank - 1
    exponents = draw(st.lists(st.tuples(*[st.integers(-3, 3)] * nvars), max_size=5))
    coefficients = draw(st.lists(st.integers(-5, 5), min_size=len(exponents), max_size=len(exponents)))
    return LaurentPoly(dict(zip(exponents, coefficients)), rank)


def test_variable_and_inverse():
    b1 = lp_variable(0, rank=2)
    poly = b1 + b1 ** -1
    assert poly.constant_term() == 0
    assert poly.support == ((-1,), (1,))
    assert poly.evaluate((1j,)) == pytest.approx(0)


def test_like_terms_are_merged():
    poly = LaurentPoly({(1, 0): 2.0}, rank=3) + LaurentPoly({(1, 0): 3.0, (0, 1): 1.0}, rank=3)
    assert poly.coefficient((1, 0)) == 5.0
    assert len(poly) == 2


def test_zero_coefficients_are_pruned():
    b = lp_variable(0, rank=2)
    assert (b - b).is_zero()
    assert len(LaurentPoly({(0,): 0.0}, rank=2)) == 0


def test_rank_mismatch_rejected():
    with pytest.raises(DimensionError):
        lp_add(lp_constant(1.0, 2), lp_constant(1.0, 3))
    with pytest.raises(DimensionError):
        LaurentPoly({(1,): 1.0}, rank=3)
    with pytest.raises(DimensionError):
        LaurentPoly({}, rank=1)


def test_negative_power_needs_monomial():
    b = lp_variable(0, rank=2)
    assert (b * 2.0) ** -2 == lp_monomial((-2,), 2, 0.25)
    with pytest.raises(EvaluationError):
        (b + 1) ** -1


def test_evaluate_at_zero_coordinate():
    b = lp_variable(0, rank=2)
    assert (b ** 2 + 1).evaluate((0,)) == 1
    with pytest.raises(EvaluationError):
        (b ** -1).evaluate((0,))
    with pytest.raises(EvaluationError):
        (b ** -1).evaluate_many(np.array([[0.0]]))


def test_evaluate_many_matches_scalar(rng):
    poly = LaurentPoly({(2, -1): 1.5, (0, 0): -2j, (-1, 3): 0.25}, rank=3)
    points = np.exp(1j * rng.uniform(0, 2 * np.pi, size=(7, 2)))
    many = poly.evaluate_many(points)
    for point, value in zip(points, many):
        assert value == pytest.approx(lp_eval(poly, point), abs=1e-13)


def test_pairing_reads_opposite_exponents():
    a = LaurentPoly({(1,): 2.0, (3,): 5.0}, rank=2)
    b = LaurentPoly({(-1,): 3.0, (0,): 7.0}, rank=2)
    assert lp_pairing(a, b) == 6.0
    assert lp_pairing(a, b) == lp_constant_term(lp_mul(a, b))


def test_conjugate_inverted_on_torus(rng):
    poly = LaurentPoly({(1, -2): 1 + 2j, (0, 1): -0.5j}, rank=3)
    point = np.exp(1j * rng.uniform(0, 2 * np.pi, size=2))
    assert lp_eval(lp_conjugate_inverted(poly), point) == pytest.approx(np.conj(lp_eval(poly, point)))


def test_spread_and_max_abs_exponent():
    poly = LaurentPoly({(2, -1): 1.0, (-1, 3): 1.0}, rank=3)
    assert lp_spread(poly) == (3, 4)
    assert poly.max_abs_exponent() == 3
    assert lp_spread(LaurentPoly({}, rank=3)) == (0, 0)


def test_almost_equal_is_relative():
    a = LaurentPoly({(0,): 1e6, (1,): 1.0}, rank=2)
    b = LaurentPoly({(0,): 1e6, (1,): 1.0 + 1e-8}, rank=2)
    assert a.almost_equal(b, tol=1e-12)
    assert not a.almost_equal(b, tol=1e-16)


@given(small_polys(), small_polys())
def test_multiplication_commutes(a, b):
    assert a * b == b * a


@settings(max_examples=50)
@given(small_polys(), small_polys(), small_polys())
def test_distributive_law(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(small_polys())
def test_additive_inverse(a):
    assert (a - a).is_zero()
    assert a + lp_constant(0.0, 3) == a
