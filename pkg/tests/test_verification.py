import json

import numpy as np
import pytest

from src.common.documents import GoldenValues
from src.common.errors import WhittakerLabError
from src.common.json_loader import JsonLoader
from src.common.models import PrimeContext
from src.common.parallel import ordered_map, spawn_generators, tree_sum
from src.symmetric.partitions import partition_size
from src.transform.inverse import inverse_transform_table
from src.verification import (
    CheckStatus,
    SuiteReport,
    evaluate_golden,
    relative_error,
    verify_cauchy,
    verify_golden,
    verify_inversion,
    verify_lfactor,
    verify_plancherel,
    verify_stade,
)
from src.verification.suites import random_schur_combination


class TestSuiteReport:
    def test_verdicts_and_exit_codes(self):
        report = SuiteReport("demo")
        report.compare("close", 1.0, 1.0 + 1e-13, 1e-12)
        report.finalize()
        assert report.passed and report.exit_code == 0

        report.compare("far", 1.0, 2.0, 1e-12)
        report.finalize()
        assert not report.passed and report.exit_code == 1
        assert [c.name for c in report.get_failed_checks()] == ["far"]

        report.diverged("series", "tail ratio is not below 1")
        report.finalize()
        assert report.exit_code == 3
        assert report.get_diverged_checks()[0].status == CheckStatus.DIVERGED
        assert report.get_statistics() == {'checks': 3, 'passed': 1, 'failed': 1, 'diverged': 1}
        assert report.worst_check().name == "far"

    def test_empty_report_does_not_pass(self):
        report = SuiteReport("empty")
        report.finalize()
        assert not report.passed

    def test_relative_error_floor(self):
        assert relative_error(1e-3, 0.0) == 1e-3
        assert relative_error(110.0, 100.0) == pytest.approx(0.1)


class TestSuites:
    def test_cauchy(self):
        report = verify_cauchy(n=2, trials=3, M=30)
        assert report.passed, report.summary
        assert report.get_statistics()['checks'] == 6

    def test_stade(self):
        report = verify_stade(n=2, p=3, trials=2, M=40, epsilons=(0.1, 0.5))
        assert report.passed, report.summary

    def test_inversion_rank_two(self):
        report = verify_inversion(n=2, p=2, trials=2, max_size=5, points=6, side=4)
        assert report.passed, report.summary

    def test_inversion_rank_three(self):
        report = verify_inversion(n=3, p=3, trials=1, max_size=4, points=4, side=2)
        assert report.passed, report.summary

    def test_inversion_rank_four(self):
        report = verify_inversion(n=4, p=2, trials=1, max_size=2, points=4, side=2)
        assert report.passed, report.summary

    def test_spectral_side_vanishes_off_support(self):
        ctx = PrimeContext(p=2, n=3)
        H = random_schur_combination(np.random.default_rng(5), ctx, max_size=3, terms=2)
        table = inverse_transform_table(H, 3)
        nonzero = [v for v, c in table.items() if abs(c) > 1e-12]
        assert len(table.values) == 16
        assert len(nonzero) == 2
        assert all(partition_size(v) <= 3 for v in nonzero)

    def test_plancherel(self):
        report = verify_plancherel(n=3, p=2, side=2, trials=2)
        assert report.passed, report.summary

    def test_lfactor(self):
        report = verify_lfactor(ds=(1, 2, 3), ps=(2,), ss=(2.5,), lambda_max=6, N=512, trials=1,
                                integral_ps=(2,), integral_s=2.5, M=60)
        assert report.passed, report.summary
        names = [c.name for c in report.checks]
        assert any(name.startswith("vanishing branches (closed)") for name in names)
        assert sum(name.startswith("integral representation") for name in names) == 3

    def test_seeded_runs_repeat(self):
        first = verify_cauchy(n=2, trials=2, M=20, seed=7).to_dict()
        second = verify_cauchy(n=2, trials=2, M=20, seed=7).to_dict()
        assert first == second

    def test_thread_count_does_not_change_results(self, monkeypatch):
        serial = verify_plancherel(n=2, side=3, trials=3).to_dict()
        monkeypatch.setenv("WHITTAKER_LAB_THREADS", "4")
        threaded = verify_plancherel(n=2, side=3, trials=3).to_dict()
        assert serial == threaded


class TestGolden:
    def test_bundled_values(self):
        report = verify_golden()
        assert report.passed, report.summary
        assert report.get_statistics()['checks'] == 19

    def test_loader_and_lookup(self):
        golden = JsonLoader.load_golden_values()
        entry = golden.get_entry("stade product, n=2, p=2, epsilon=1")
        assert entry is not None and entry.expected_value == 12.0
        assert evaluate_golden(entry) == pytest.approx(12.0)
        assert len(golden.get_entries_by_kind("flat_closed")) == 5

    def test_mismatch_detected(self, tmp_path):
        path = tmp_path / "golden.json"
        path.write_text(json.dumps([
            {"name": "wrong", "kind": "schur", "params": {"m": [1], "alpha": [2, 3]}, "expected": [6.0, 0.0]},
        ]))
        report = verify_golden(path)
        assert not report.passed
        assert report.exit_code == 1

    def test_malformed_file(self, tmp_path):
        path = tmp_path / "golden.json"
        path.write_text('[{"name": "x", "kind": "nonsense", "params": {}, "expected": [0, 0]}]')
        with pytest.raises(Exception):
            JsonLoader.load_golden_values(path)
        assert GoldenValues.model_validate([]).get_all_entries() == []


class TestParallel:
    def test_ordered_map_keeps_order(self):
        assert ordered_map(lambda x: x * x, range(10), threads=4) == [x * x for x in range(10)]

    def test_spawned_generators_are_reproducible(self):
        a = [g.uniform() for g in spawn_generators(3, 4)]
        b = [g.uniform() for g in spawn_generators(3, 4)]
        assert a == b and len(set(a)) == 4

    def test_tree_sum(self):
        assert tree_sum([]) == 0
        assert tree_sum([1, 2j, 3]) == 4 + 2j

    def test_bad_thread_setting(self, monkeypatch):
        monkeypatch.setenv("WHITTAKER_LAB_THREADS", "many")
        with pytest.raises(WhittakerLabError):
            ordered_map(str, [1, 2])
