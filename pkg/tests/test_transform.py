import numpy as np
import pytest

from src.algebra.laurent import LaurentPoly, lp_variable
from src.common.errors import ContractError, DomainError, SupportError
from src.common.models import DecayBound
from src.symmetric.partitions import m_to_partition
from src.symmetric.schur import schur_jacobi_trudi, schur_laurent
from src.transform.forward import (
    forward_transform,
    forward_transform_laurent,
    forward_transform_series,
    measure_weight,
    schur_inverse_image,
)
from src.transform.functions import CompactFunction, SpectralFunction
from src.transform.inverse import (
    exact_node_count,
    inverse_transform_exact,
    inverse_transform_quadrature,
    inverse_transform_table,
    vandermonde_laurent,
)
from src.transform.quadrature import torus_mean, torus_nodes
from src.whittaker.spherical import delta, delta_half, torus_point_to_alphabet
from tests.conftest import torus_points


def schur_function(m, ctx, coefficient=1.0):
    return SpectralFunction(ctx, exact=schur_laurent(m, False, ctx.n) * coefficient, symmetric=True)


class TestCompactFunction:
    def test_lookup_and_default(self, ctx3):
        h = CompactFunction(values={(0, 0): 1.0, (1, 2): 0.5j}, ctx=ctx3)
        assert h((1, 2)) == 0.5j
        assert h((3, 3)) == 0
        assert h.support == ((0, 0), (1, 2))

    def test_outside_cone_rejected(self, ctx3):
        with pytest.raises(SupportError):
            CompactFunction(values={(0, -1): 1.0}, ctx=ctx3)
        with pytest.raises(SupportError):
            CompactFunction(values={(0,): 1.0}, ctx=ctx3)

    def test_from_function(self, ctx3):
        h = CompactFunction.from_function(lambda v: v[0] - v[1], ctx3, side=2)
        assert len(h.values) == 9
        assert h((2, 0)) == 2


class TestForward:
    def test_identity_indicator(self, rng, ctx3):
        alpha = rng.normal(size=3) + 1j * rng.normal(size=3)
        assert forward_transform(CompactFunction.indicator((0, 0), ctx3), alpha) == pytest.approx(1)

    @pytest.mark.parametrize("m", [(0, 0), (1, 0), (2, 3)])
    def test_schur_preimage(self, rng, ctx3, m):
        alpha = rng.normal(size=3) + 1j * rng.normal(size=3)
        h = schur_inverse_image(m, ctx3)
        assert forward_transform(h, alpha) == pytest.approx(schur_jacobi_trudi(m, alpha), rel=1e-12)

    def test_regularizing_weight(self, ctx3):
        alpha = (0.5, 1.0, 2.0)
        h = schur_inverse_image((1, 2), ctx3)
        size = sum(m_to_partition((1, 2)))
        plain = forward_transform(h, alpha)
        assert forward_transform(h, alpha, epsilon=0.5) == pytest.approx(plain * 2.0 ** (-0.5 * size))
        with pytest.raises(DomainError):
            forward_transform(h, alpha, epsilon=-0.1)

    def test_measure_weight_inverts_delta(self, ctx3):
        assert measure_weight((2, 1), ctx3) * delta((2, 1), ctx3) == pytest.approx(1)

    def test_empty_function(self, ctx3):
        assert forward_transform(CompactFunction(values={}, ctx=ctx3), (1, 1, 1)) == 0

    def test_laurent_image_matches_numeric(self, rng, ctx3):
        h = CompactFunction(values={(0, 0): 1.0, (1, 0): -2j, (2, 1): 0.5}, ctx=ctx3)
        H = forward_transform_laurent(h)
        for beta in torus_points(rng, 5, 2):
            assert H(beta) == pytest.approx(forward_transform(h, torus_point_to_alphabet(beta)), abs=1e-12)


class TestForwardSeries:
    def geometric_kernel(self, ctx):
        # delta^(1/2)(v) p^(-v); its transform is 1 / prod (1 - alpha_i / p)
        return lambda v: delta_half(v, ctx) * float(ctx.p) ** (-v[0])

    def test_converges_to_closed_form(self, ctx2):
        decay = DecayBound(constant=1.0, eta=0.0, epsilon0=1.0)
        result = forward_transform_series(self.geometric_kernel(ctx2), (1, 1), 0.0, 60, ctx=ctx2, decay=decay)
        assert abs(result.value - 4.0) <= result.tail_bound
        assert result.tail_bound < 1e-10

    def test_requires_declared_decay(self, ctx2):
        with pytest.raises(ContractError):
            forward_transform_series(self.geometric_kernel(ctx2), (1, 1), 0.0, 10, ctx=ctx2)

    def test_eta_must_match_declaration(self, ctx2):
        decay = DecayBound(constant=1.0, eta=0.5, epsilon0=0.5)
        with pytest.raises(ContractError):
            forward_transform_series(self.geometric_kernel(ctx2), (1, 1), 0.0, 10, ctx=ctx2, decay=decay)

    def test_violated_decay_detected(self, ctx2):
        decay = DecayBound(constant=1.0, eta=0.0, epsilon0=1.0)
        kernel = self.geometric_kernel(ctx2)
        with pytest.raises(ContractError):
            forward_transform_series(lambda v: 2 * kernel(v), (1, 1), 0.0, 10, ctx=ctx2, decay=decay)

    def test_alpha_outside_annulus(self, ctx2):
        decay = DecayBound(constant=1.0, eta=0.0, epsilon0=1.0)
        with pytest.raises(DomainError):
            forward_transform_series(self.geometric_kernel(ctx2), (1.5, 1 / 1.5), 0.0, 10, ctx=ctx2, decay=decay)


class TestInverse:
    @pytest.mark.parametrize("m", [(0, 0), (1, 0), (1, 2)])
    def test_schur_inverts_to_scaled_indicator(self, ctx3, m):
        H = schur_function(m, ctx3)
        for v in [(0, 0), (1, 0), (0, 1), (1, 2), (2, 1)]:
            expected = delta_half(m, ctx3) if v == m else 0.0
            assert inverse_transform_exact(H, v) == pytest.approx(expected, abs=1e-12)

    def test_off_cone_is_zero(self, ctx3):
        assert inverse_transform_exact(schur_function((1, 0), ctx3), (-1, 0)) == 0
        assert inverse_transform_quadrature(schur_function((1, 0), ctx3), (0, -2), 16) == 0

    def test_quadrature_matches_exact(self, ctx3):
        H = SpectralFunction(ctx3, exact=schur_laurent((1, 1), False, 3) * 2.0 + schur_laurent((0, 2), False, 3) * 1j,
                             symmetric=True)
        for v in [(1, 1), (0, 2), (2, 0)]:
            N = exact_node_count(H, v)
            assert inverse_transform_quadrature(H, v, N) == pytest.approx(inverse_transform_exact(H, v), abs=1e-12)

    @pytest.mark.parametrize("seed", range(20))
    def test_quadrature_matches_exact_for_random_images(self, ctx3, seed):
        rng = np.random.default_rng(seed)
        box = [(i, j) for i in range(3) for j in range(3)]
        values = rng.normal(size=len(box)) + 1j * rng.normal(size=len(box))
        H = forward_transform_laurent(CompactFunction(values=dict(zip(box, values)), ctx=ctx3))
        scale = max(1.0, float(np.max(np.abs(values))))
        for v in box:
            exact = inverse_transform_exact(H, v)
            quadrature = inverse_transform_quadrature(H, v, exact_node_count(H, v))
            assert abs(quadrature - exact) <= 1e-11 * scale, v

    def test_rank_two_quadrature_from_evaluator(self, ctx2):
        poly = schur_laurent((3,), False, 2)
        H = SpectralFunction(ctx2, evaluator=poly.evaluate_many, symmetric=True)
        assert inverse_transform_quadrature(H, (3,), 32) == pytest.approx(delta_half((3,), ctx2), abs=1e-12)

    def test_geometric_round_trip(self, rng, ctx3):
        values = {v: complex(x, y) for v, x, y in zip([(0, 0), (1, 0), (0, 1), (2, 2)], *rng.normal(size=(2, 4)))}
        h = CompactFunction(values=values, ctx=ctx3)
        back = inverse_transform_table(forward_transform_laurent(h), side=2)
        assert h.max_abs_difference(back) < 1e-10

    def test_asymmetric_function_rejected(self, ctx3):
        H = SpectralFunction(ctx3, exact=lp_variable(0, 3))
        with pytest.raises(ContractError):
            inverse_transform_exact(H, (0, 0))

    def test_asymmetric_function_rejected_off_cone(self, ctx3):
        with pytest.raises(ContractError):
            inverse_transform_exact(SpectralFunction(ctx3, exact=lp_variable(0, 3)), (-1, 0))
        with pytest.raises(ContractError):
            inverse_transform_quadrature(SpectralFunction(ctx3, exact=lp_variable(0, 3)), (0, -2), 16)

    def test_contract_checks(self, ctx3):
        H = SpectralFunction(ctx3, evaluator=lambda b: np.ones(len(b)), symmetric=True)
        with pytest.raises(ContractError):
            inverse_transform_exact(H, (0, 0))
        with pytest.raises(DomainError):
            inverse_transform_table(H, side=1)
        with pytest.raises(DomainError):
            inverse_transform_quadrature(H, (0, 0), 2)
        with pytest.raises(ContractError):
            SpectralFunction(ctx3)


class TestQuadrature:
    def test_torus_nodes_cover_grid(self):
        nodes = torus_nodes(8, 2)
        assert nodes.shape == (64, 2)
        assert np.allclose(np.abs(nodes), 1)

    def test_mean_extracts_constant_term(self):
        poly = LaurentPoly({(0, 0): 3.0, (1, -1): 5.0, (2, 0): 1j}, rank=3)
        assert torus_mean(poly.evaluate_many, 8, 2) == pytest.approx(3.0, abs=1e-13)

    def test_vandermonde_constant_term_is_factorial(self):
        # on the torus prod_{i != j} (beta_i - beta_j) = |Vandermonde|^2
        assert vandermonde_laurent(3).constant_term() == pytest.approx(6)
        assert vandermonde_laurent(2).constant_term() == pytest.approx(2)
