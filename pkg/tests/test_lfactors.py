import cmath

import numpy as np
import pytest

from src.common.errors import ConditioningError, ContextError, DivergenceError, DomainError, PoleError, UnsupportedDegreeError
from src.common.models import LFactorQuery
from src.lfactors import (
    FLAT_PROFILES,
    flat_decay,
    lfactor_flat_closed,
    lfactor_flat_numeric,
    lfactor_spectral,
    lfactor_table,
    local_lfactor,
    pole_radii,
    substitution_defect,
    verify_integral_representation,
)
from src.lfactors.local_factors import check_pole_clearance, contour_mean, sym_exponents


def close(closed, numeric, rtol=1e-8):
    return abs(closed - numeric) <= rtol * abs(closed) + 1e-12


class TestLocalFactor:
    @pytest.mark.parametrize("d, p, s, expected", [
        (1, 2, 1, 4.0),
        (2, 2, 1, 8.0),
        (1, 3, 2, 1.265625),
    ])
    def test_unit_parameter_values(self, d, p, s, expected):
        assert local_lfactor(LFactorQuery(d=d, alpha=1, p=p, s=s)) == pytest.approx(expected, rel=1e-14)

    def test_inverse_parameter_symmetry(self):
        alpha = cmath.exp(0.7j)
        for d in (1, 2, 3, 5):
            a = local_lfactor(LFactorQuery(d=d, alpha=alpha, p=3, s=2.5))
            b = local_lfactor(LFactorQuery(d=d, alpha=1 / alpha, p=3, s=2.5))
            assert a == pytest.approx(b, rel=1e-12)

    def test_pole(self):
        with pytest.raises(PoleError):
            local_lfactor(LFactorQuery(d=1, alpha=2, p=2, s=1))

    def test_query_validation(self):
        with pytest.raises(DomainError):
            LFactorQuery(d=0, alpha=1, p=2, s=2)
        with pytest.raises(DomainError):
            LFactorQuery(d=1, alpha=0, p=2, s=2)
        with pytest.raises(DomainError):
            LFactorQuery(d=1, alpha=1, p=4, s=2)
        with pytest.raises(DomainError):
            LFactorQuery(d=1, alpha=1, p=2, s=-0.5)

    def test_sym_exponents(self):
        assert sym_exponents(3) == [3, 1, -1, -3]

    def test_spectral_evaluator_is_symmetric(self):
        H = lfactor_spectral(2, 2.0, 3)
        beta = np.exp(1j * np.linspace(0.1, 3.0, 7))[:, None]
        assert np.allclose(H.evaluate(beta), H.evaluate(1 / beta))
        with pytest.raises(ContextError):
            lfactor_spectral(1, 2.0, 9)


class TestClosedForms:
    @pytest.mark.parametrize("d, lam, p, s, expected", [
        (1, 2, 2, 1, 0.125),
        (2, 0, 2, 1, 4 / 3),
        (2, 3, 2, 1, 0.0),
        (3, 1, 2, 2.5, 0.0),
        (4, 1, 2, 2.5, 0.0),
    ])
    def test_reference_values(self, d, lam, p, s, expected):
        assert lfactor_flat_closed(d, lam, p, s) == pytest.approx(expected, rel=1e-14, abs=0)

    def test_vanishing_branches_are_exact_zero(self):
        for lam in range(1, 12, 2):
            assert lfactor_flat_closed(2, lam, 3, 2.0) == 0
            assert lfactor_flat_closed(4, lam, 3, 2.0) == 0
        assert lfactor_flat_closed(3, 1, 2, 2.5) == 0

    def test_profiles_cover_every_residue(self):
        assert sorted(FLAT_PROFILES) == [1, 2, 3, 4]
        assert all(profile.covers_all_residues() for profile in FLAT_PROFILES.values())

    def test_negative_lambda(self):
        assert lfactor_flat_closed(1, -1, 2, 2.0) == 0

    def test_unsupported_degree(self):
        with pytest.raises(UnsupportedDegreeError):
            lfactor_flat_closed(5, 0, 2, 2.0)

    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    @pytest.mark.parametrize("p, s", [(2, 2.0), (3, 2.5), (5, 3 + 0.5j)])
    def test_agrees_with_contour_oracle(self, d, p, s):
        for lam in range(10):
            closed = lfactor_flat_closed(d, lam, p, s)
            numeric = lfactor_flat_numeric(d, lam, p, s, N=1024)
            assert close(closed, numeric), (d, p, s, lam)


class TestNumericOracle:
    def test_higher_degree_without_closed_form(self):
        coarse = lfactor_flat_numeric(5, 3, 2, 3.0, N=512)
        fine = lfactor_flat_numeric(5, 3, 2, 3.0, N=1024)
        assert abs(coarse - fine) < 1e-12

    def test_adaptive_node_count(self):
        assert close(lfactor_flat_closed(3, 6, 2, 2.0), lfactor_flat_numeric(3, 6, 2, 2.0))

    def test_reference_values(self):
        assert lfactor_flat_numeric(1, 0, 2, 1.0, N=256) == pytest.approx(1.0, abs=1e-12)
        assert abs(lfactor_flat_numeric(4, 1, 2, 2.5)) < 1e-10
        coarse = lfactor_flat_numeric(5, 0, 3, 3.0, N=512)
        assert abs(coarse - lfactor_flat_numeric(5, 0, 3, 3.0, N=1024)) < 1e-9

    def test_node_floor(self):
        with pytest.raises(DomainError):
            lfactor_flat_numeric(1, 0, 2, 2.0, N=32)

    def test_pole_too_close_to_circle(self):
        with pytest.raises(ConditioningError):
            check_pole_clearance(1, 1e-9, 2)
        radii = pole_radii(3, 2.0, 2)
        assert radii == pytest.approx([0.25, 4 ** (-1 / 3), 4 ** (1 / 3), 4.0])

    @pytest.mark.parametrize("d", [1, 3, 5])
    def test_substitution_symmetry(self, d):
        for lam in (0, 3, 7):
            assert substitution_defect(d, lam, 3, 2.5) < 1e-10

    def test_contour_mean_reads_constant_term(self):
        assert contour_mean(lambda b: 2 + b + 3 / b ** 2, 16) == pytest.approx(2)


class TestTable:
    def test_rows(self):
        rows = lfactor_table(3, 2, 2.5, 8)
        assert [row.lam for row in rows] == list(range(9))
        assert all(row.cross_checked for row in rows)
        assert all(row.difference <= 1e-8 * abs(row.closed) + 1e-12 for row in rows)
        assert set(rows[0].to_dict()) == {'lambda', 'closed', 'numeric', 'abs_diff', 'cross_checked'}

    def test_rows_without_closed_form(self):
        rows = lfactor_table(6, 3, 4.0, 3, N=256)
        assert not any(row.cross_checked for row in rows)
        assert rows[0].difference is None


class TestIntegralRepresentation:
    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_unit_circle_parameters(self, d):
        report = verify_integral_representation(LFactorQuery(d=d, alpha=cmath.exp(1.3j), p=2, s=2.5), M=80)
        assert not report.diverged
        assert report.closed_form
        assert report.discrepancy <= min(1e-8, report.tail_bound)
        assert report.passed

    @pytest.mark.parametrize("d, p, s, alpha, limit", [
        (1, 2, 1.5, cmath.exp(1j * cmath.pi / 7), 1e-10),
        (2, 3, 2.0, cmath.exp(0.4j), 1e-9),
    ])
    def test_reference_configurations(self, d, p, s, alpha, limit):
        report = verify_integral_representation(LFactorQuery(d=d, alpha=alpha, p=p, s=s), M=80)
        assert report.passed
        assert report.discrepancy < limit

    def test_numeric_kernel_for_higher_degree(self):
        report = verify_integral_representation(LFactorQuery(d=5, alpha=1, p=3, s=4.0), M=40, N=512)
        assert not report.closed_form
        assert report.message == "no closed-form cross-check"
        assert report.discrepancy <= 1e-8

    def test_divergence_reported(self):
        report = verify_integral_representation(LFactorQuery(d=1, alpha=4, p=2, s=1), M=20)
        assert report.diverged
        assert not report.passed
        assert report.series_value is None

    def test_decay_requires_margin(self):
        assert flat_decay(2, 3, 2.0).epsilon0 == pytest.approx(1.0)
        with pytest.raises(DivergenceError):
            flat_decay(2, 3, 2.0, eta=1.0)
