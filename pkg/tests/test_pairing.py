import numpy as np
import pytest

from src.common.errors import ContractError, DimensionError, DomainError, PoleError
from src.common.models import PrimeContext, RegularizedPairingParams
from src.symmetric.schur import schur_laurent
from src.transform.forward import forward_transform_laurent, schur_inverse_image
from src.transform.functions import CompactFunction, SpectralFunction
from src.transform.pairing import plancherel_geometric, plancherel_spectral, stade_rhs, whittaker_pairing


class TestStadeFormula:
    def test_closed_form_reference(self, ctx2):
        assert stade_rhs((1, 1), (1, 1), 1.0, ctx2) == pytest.approx(12.0, rel=1e-14)

    @pytest.mark.parametrize("epsilon", [0.0, 0.1, 0.5])
    def test_pairing_within_tail_bound(self, rng, ctx3, epsilon):
        alpha = rng.uniform(0.3, 0.7, 3) * np.exp(2j * np.pi * rng.uniform(size=3))
        beta = rng.uniform(0.3, 0.7, 3) * np.exp(2j * np.pi * rng.uniform(size=3))
        result = whittaker_pairing(alpha, beta, RegularizedPairingParams(epsilon=epsilon, truncation=40), ctx3)
        assert abs(result.value - stade_rhs(alpha, beta, epsilon, ctx3)) <= result.tail_bound
        assert result.to_dict()['terms'] == 41 ** 2

    def test_unit_parameters_need_regularization(self, ctx2):
        with pytest.raises(DomainError):
            whittaker_pairing((1, 1), (1, 1), RegularizedPairingParams(epsilon=0.0), ctx2)
        result = whittaker_pairing((1, 1), (1, 1), RegularizedPairingParams(epsilon=1.0, truncation=80), ctx2)
        assert abs(result.value - 12.0) <= result.tail_bound

    def test_pole_reported(self, ctx2):
        with pytest.raises(PoleError):
            stade_rhs((2, 0.5), (1, 1), 1.0, ctx2)

    def test_invalid_parameters(self, ctx2):
        with pytest.raises(DomainError):
            RegularizedPairingParams(epsilon=-1.0)
        with pytest.raises(DimensionError):
            stade_rhs((0.1, 0.2, 0.3), (0.1, 0.2), 0.5, ctx2)


class TestPlancherel:
    def test_schur_orthonormality(self, ctx3):
        s = lambda m: SpectralFunction(ctx3, exact=schur_laurent(m, False, 3), symmetric=True)
        assert plancherel_spectral(s((1, 2)), s((1, 2))) == pytest.approx(1, abs=1e-12)
        assert plancherel_spectral(s((1, 2)), s((2, 1))) == pytest.approx(0, abs=1e-12)
        h = schur_inverse_image((1, 2), ctx3)
        assert plancherel_geometric(h, h) == pytest.approx(1, rel=1e-14)

    def test_random_functions(self, rng, ctx3):
        def draw():
            values = rng.normal(size=(9, 2))
            keys = [(i, j) for i in range(3) for j in range(3)]
            return CompactFunction(values={k: complex(*v) for k, v in zip(keys, values)}, ctx=ctx3)

        h1, h2 = draw(), draw()
        geometric = plancherel_geometric(h1, h2)
        spectral = plancherel_spectral(forward_transform_laurent(h1), forward_transform_laurent(h2))
        assert spectral == pytest.approx(geometric, rel=1e-10)

    def test_conjugate_linear_in_second_slot(self, ctx2):
        h = CompactFunction(values={(0,): 1.0, (2,): 1j}, ctx=ctx2)
        assert plancherel_geometric(h, h).imag == pytest.approx(0)
        scaled = CompactFunction(values={k: 1j * c for k, c in h.values.items()}, ctx=ctx2)
        assert plancherel_geometric(h, scaled) == pytest.approx(-1j * plancherel_geometric(h, h))

    def test_contract_checks(self, ctx3):
        evaluator = SpectralFunction(ctx3, evaluator=lambda b: np.ones(len(b)), symmetric=True)
        exact = SpectralFunction(ctx3, exact=schur_laurent((0, 0), False, 3), symmetric=True)
        with pytest.raises(ContractError):
            plancherel_spectral(evaluator, exact)
        other = CompactFunction(values={(0, 0): 1.0}, ctx=PrimeContext(p=3, n=3))
        with pytest.raises(DimensionError):
            plancherel_geometric(schur_inverse_image((0, 0), ctx3), other)
