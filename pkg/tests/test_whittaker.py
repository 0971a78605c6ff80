import math

import numpy as np
import pytest

from src.common.errors import DimensionError, SupportError
from src.common.models import PrimeContext
from src.symmetric.schur import schur_jacobi_trudi
from src.whittaker.spherical import (
    delta,
    delta_half,
    modular_exponent,
    p_half_power,
    torus_point_to_alphabet,
    whittaker_eval,
    whittaker_grid,
    whittaker_laurent,
)
from tests.conftest import torus_points


def test_identity_value_is_one():
    for n in (2, 3, 4):
        ctx = PrimeContext(p=3, n=n)
        alpha = np.arange(1, n + 1) * (1 + 0.5j)
        assert whittaker_eval(alpha, (0,) * (n - 1), ctx) == pytest.approx(1)


def test_rank_two_example(ctx2):
    assert whittaker_eval((1, 1), (1,), ctx2) == pytest.approx(math.sqrt(2), rel=1e-15)


def test_vanishes_off_cone(ctx3):
    assert whittaker_eval((1, 2, 3), (-1, 2), ctx3) == 0
    grid = whittaker_grid(np.ones((4, 3)), (2, -1), ctx3)
    assert np.all(grid == 0)


def test_modular_factor():
    assert delta((3,), PrimeContext(p=2, n=2)) == 2.0 ** -3
    assert delta((1, 2), PrimeContext(p=5, n=3)) == pytest.approx(6.4e-05, rel=1e-15)
    assert modular_exponent((1, 2), PrimeContext(p=5, n=3)) == 6
    assert delta_half((1,), PrimeContext(p=2, n=2)) ** 2 == pytest.approx(0.5)


def test_half_powers_are_exact():
    assert p_half_power(4, 3) == 8.0
    assert p_half_power(2, -2) == 0.5
    assert p_half_power(2, 4000) == math.inf


def test_shintani_formula(rng, ctx3):
    alpha = rng.normal(size=3) + 1j * rng.normal(size=3)
    v = (2, 1)
    expected = 2.0 ** (-(2 * 2 + 1 * 2) / 2) * schur_jacobi_trudi(v, alpha)
    assert whittaker_eval(alpha, v, ctx3) == pytest.approx(expected)


def test_grid_matches_scalar(rng, ctx3):
    alphas = rng.normal(size=(5, 3)) + 1j * rng.normal(size=(5, 3))
    grid = whittaker_grid(alphas, (1, 2), ctx3)
    for alpha, value in zip(alphas, grid):
        assert value == pytest.approx(whittaker_eval(alpha, (1, 2), ctx3))


def test_rank_mismatch(ctx3):
    with pytest.raises(DimensionError):
        whittaker_eval((1, 2), (0, 0), ctx3)
    with pytest.raises(DimensionError):
        whittaker_eval((1, 2, 3), (0,), ctx3)


def test_laurent_form(rng, ctx3):
    poly = whittaker_laurent((1, 1), True, ctx3)
    for beta in torus_points(rng, 4, 2):
        alphabet = torus_point_to_alphabet(beta)
        assert poly.evaluate(beta) == pytest.approx(whittaker_eval(1 / alphabet, (1, 1), ctx3), abs=1e-12)
    with pytest.raises(SupportError):
        whittaker_laurent((0, -1), False, ctx3)


def test_torus_alphabet_has_unit_product(rng):
    alphabet = torus_point_to_alphabet(torus_points(rng, 3, 3))
    assert alphabet.shape == (3, 4)
    assert np.allclose(np.prod(alphabet, axis=1), 1)
