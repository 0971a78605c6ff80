import csv
import io
import json

import pytest

from run_lab import main, recheck_report, run_infrastructure_tests


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def document(out):
    return json.loads(out)


class TestEvaluation:
    def test_whittaker_example(self, capsys):
        code, out = run(capsys, "whittaker", "--p", "2", "--n", "2", "--v", "0", "--alpha", "1,1")
        doc = document(out)
        assert code == 0
        assert doc['schema'] == 1
        assert doc['results']['value'] == [1.0, 0.0]
        assert doc['inputs'] == {'command': 'whittaker', 'suite': None,
                                 'params': {'alpha': '1,1', 'n': 2, 'p': 2, 'v': '0'}}

    def test_whittaker_off_cone(self, capsys):
        code, out = run(capsys, "whittaker", "--p", "3", "--n", "3", "--v=-1,2", "--alpha", "1,2,3")
        assert code == 0
        assert document(out)['results']['value'] == [0.0, 0.0]

    def test_schur_all_methods(self, capsys):
        code, out = run(capsys, "schur", "--m", "1,1", "--alpha", "1,2,3", "--method", "all")
        values = document(out)['results']['values']
        assert code == 0
        assert set(values) == {'jacobi-trudi', 'bialternant', 'tableau'}
        assert all(v[0] == pytest.approx(60.0) for v in values.values())

    def test_forward_schur_image(self, capsys):
        code, out = run(capsys, "forward", "--p", "2", "--n", "3", "--alpha", "1,2,3", "--schur-image", "1,0")
        assert code == 0
        assert document(out)['results']['value'][0] == pytest.approx(11.0)

    def test_inverse_exact_and_quadrature(self, capsys):
        args = ["inverse", "--p", "2", "--n", "2", "--H", "3:1", "--v", "3"]
        _, exact = run(capsys, *args)
        _, quadrature = run(capsys, *args, "--method", "quadrature", "--N", "32")
        expected = 2.0 ** -1.5
        assert document(exact)['results']['value'][0] == pytest.approx(expected)
        assert document(quadrature)['results']['value'][0] == pytest.approx(expected, abs=1e-12)

    def test_inverse_lfactor_operand(self, capsys):
        code, out = run(capsys, "inverse", "--p", "2", "--n", "2", "--lfactor-d", "1", "--s", "1", "--v", "2")
        assert code == 0
        assert document(out)['results']['value'][0] == pytest.approx(0.125, abs=1e-12)

    def test_pairing_check(self, capsys):
        code, out = run(capsys, "pairing", "--p", "2", "--n", "2", "--alpha", "1,1", "--beta", "1,1",
                        "--epsilon", "1", "--M", "80")
        doc = document(out)
        assert code == 0 and doc['passed']
        assert doc['results']['closed_form'] == [12.0, 0.0]


class TestRejections:
    def test_invalid_prime(self, capsys):
        code, out = run(capsys, "whittaker", "--p", "4", "--n", "2", "--v", "0", "--alpha", "1,1")
        doc = document(out)
        assert code == 2
        assert doc['passed'] is False
        assert doc['error']['error'] == 'invalid_context'

    def test_unparseable_vector(self, capsys):
        code, out = run(capsys, "whittaker", "--p", "2", "--n", "2", "--v", "x", "--alpha", "1,1")
        assert code == 2
        assert 'error' in document(out)

    def test_divergent_pairing(self, capsys):
        code, _ = run(capsys, "pairing", "--p", "2", "--n", "2", "--alpha", "1,1", "--beta", "1,1")
        assert code == 2

    def test_missing_reference_file(self, capsys, tmp_path):
        code, out = run(capsys, "verify", "golden", "--file", str(tmp_path / "absent.json"))
        assert code == 2
        assert document(out)['error']['error'] == 'configuration_error'


class TestLFactorTable:
    def test_csv_by_default(self, capsys):
        code, out = run(capsys, "lfactor-table", "--d", "3", "--p", "2", "--s", "2.5", "--lambda-max", "4")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0
        assert [int(r['lambda']) for r in rows] == [0, 1, 2, 3, 4]
        assert float(rows[1]['closed_re']) == 0.0
        assert set(rows[0]) >= {'lambda', 'closed_re', 'closed_im', 'numeric_re', 'numeric_im', 'abs_diff'}

    def test_json_without_closed_form(self, capsys):
        code, out = run(capsys, "lfactor-table", "--d", "5", "--p", "3", "--s", "4", "--lambda-max", "2",
                        "--N", "256", "--format", "json")
        doc = document(out)
        assert code == 0
        assert doc['results']['message'] == "no closed-form cross-check"
        assert doc['checks'] == []


class TestVerifyAndRecheck:
    def test_golden_suite(self, capsys):
        code, out = run(capsys, "verify", "golden")
        doc = document(out)
        assert code == 0 and doc['passed']
        assert doc['results']['statistics']['checks'] == 19

    def test_output_is_deterministic(self, capsys):
        args = ["verify", "plancherel", "--n", "2", "--cube", "3", "--trials", "3"]
        _, first = run(capsys, *args)
        _, second = run(capsys, *args)
        assert first == second
        assert document(first)['passed']

    def test_recheck_round_trip(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        code, _ = run(capsys, "verify", "cauchy", "--n", "2", "--M", "20", "--trials", "2",
                      "--output", str(path))
        assert code == 0
        doc, recheck_code = recheck_report(str(path))
        assert recheck_code == 0
        assert doc['results'] == {'identical': True, 'stored_passed': True}

    def test_recheck_detects_edits(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        run(capsys, "schur", "--m", "1", "--alpha", "2,3", "--output", str(path))
        stored = json.loads(path.read_text())
        stored['results']['value'] = [6.0, 0.0]
        path.write_text(json.dumps(stored, indent=2, sort_keys=True) + "\n")
        code, out = run(capsys, "--recheck", str(path))
        assert code == 1
        assert document(out)['results']['identical'] is False


def test_infrastructure():
    result = run_infrastructure_tests()
    assert result.passed, result.modules
