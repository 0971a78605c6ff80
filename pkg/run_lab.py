#!/usr/bin/env python3
"""whittaker_lab command line: evaluation, transforms, identity suites and L-factor tables."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

PROJECT_ROOT = Path(__file__).parent
sys.path.insert(0, str(PROJECT_ROOT))

from pydantic import ValidationError

from configs.lab_settings import CONTOUR_DEFAULT_NODES
from src.algebra.laurent import LaurentPoly
from src.common.documents import JobInputs, JobSpec
from src.common.errors import DomainError, WhittakerLabError
from src.common.json_loader import JsonLoader
from src.common.models import PrimeContext, RegularizedPairingParams, SpectralParams
from src.lfactors.flat_profiles import lfactor_table
from src.lfactors.local_factors import lfactor_spectral
from src.report.console import failure, success
from src.report.report_generator import LabReportGenerator, build_document, error_document
from src.symmetric.partitions import m_to_partition, schur_dimension
from src.symmetric.schur import schur_bialternant, schur_jacobi_trudi, schur_laurent
from src.symmetric.tableaux import schur_tableau_oracle
from src.transform.forward import forward_transform, schur_inverse_image
from src.transform.functions import CompactFunction, SpectralFunction
from src.transform.inverse import (
    exact_node_count,
    inverse_transform_exact,
    inverse_transform_quadrature,
    inverse_transform_table,
)
from src.transform.pairing import stade_rhs, whittaker_pairing
from src.verification.golden import verify_golden
from src.verification.suite_report import SuiteReport
from src.verification.suites import (
    LFACTOR_ABSOLUTE_FLOOR,
    verify_cauchy,
    verify_inversion,
    verify_lfactor,
    verify_plancherel,
    verify_stade,
)
from src.whittaker.spherical import whittaker_eval

# argparse destinations that are not job parameters
_NON_PARAMS = {'command', 'suite', 'format', 'output', 'summary', 'recheck', 'test', 'verbose'}


@dataclass
class JobOutcome:
    """Everything a job produces before serialization"""

    results: Any
    checks: List[Dict[str, Any]] = field(default_factory=list)
    passed: bool = True
    rows: Optional[List[Dict[str, Any]]] = None
    exit_code: int = 0


@dataclass
class InfrastructureTestResult:
    """Status of required modules and subsystems."""

    passed: bool
    modules: Dict[str, bool]


# ============================================================================
# Parameter parsing
# ============================================================================

def _parse(kind: str, text: Any, convert: Callable[[str], Any]) -> Any:
    try:
        return convert(str(text).replace(' ', ''))
    except ValueError as exc:
        raise DomainError(f"Cannot parse {kind} from {text!r}", details={'value': str(text)}) from exc


def parse_complex(text: Any) -> complex:
    return _parse("a complex number", text, complex)


def parse_index(text: Any) -> Tuple[int, ...]:
    """'1,0' -> (1, 0)"""
    return _parse("an integer vector", text, lambda t: tuple(int(x) for x in t.split(',') if x))


def parse_list(text: Any, convert: Callable[[str], Any]) -> List[Any]:
    return _parse("a list", text, lambda t: [convert(x) for x in t.split(',') if x])


def parse_lattice_map(text: Any) -> Dict[Tuple[int, ...], complex]:
    """'0,0:1;1,2:0.5j' -> {(0, 0): 1, (1, 2): 0.5j}"""
    def convert(t: str) -> Dict[Tuple[int, ...], complex]:
        entries = {}
        for item in (part for part in t.split(';') if part):
            key, value = item.split(':')
            entries[tuple(int(x) for x in key.split(',') if x)] = complex(value)
        return entries
    return _parse("a lattice map", text, convert)


def _spectral(params: Dict[str, Any], key: str = 'alpha') -> SpectralParams:
    if params.get(key) is None:
        raise DomainError(f"--{key} is required")
    return SpectralParams(alpha=str(params[key]))


def _context(params: Dict[str, Any]) -> PrimeContext:
    return PrimeContext(p=params['p'], n=params['n'])


# ============================================================================
# Jobs
# ============================================================================

def run_schur(params: Dict[str, Any], verbose: bool = False) -> JobOutcome:
    alpha = _spectral(params)
    m = parse_index(params['m'])
    evaluators = {
        'jacobi-trudi': schur_jacobi_trudi,
        'bialternant': schur_bialternant,
        'tableau': schur_tableau_oracle,
    }
    methods = list(evaluators) if params['method'] == 'all' else [params['method']]
    values = {method: evaluators[method](m, alpha) for method in methods}
    results = {'m': list(m), 'partition': list(m_to_partition(m)), 'dimension': schur_dimension(m)}
    if len(values) == 1:
        results['value'] = values[methods[0]]
    else:
        results['values'] = values
    return JobOutcome(results=results)


def run_whittaker(params: Dict[str, Any], verbose: bool = False) -> JobOutcome:
    ctx = _context(params)
    alpha = _spectral(params)
    v = parse_index(params['v'])
    return JobOutcome(results={'value': whittaker_eval(alpha, v, ctx)})


def run_forward(params: Dict[str, Any], verbose: bool = False) -> JobOutcome:
    ctx = _context(params)
    alpha = _spectral(params)
    if params.get('schur_image') is not None:
        h = schur_inverse_image(parse_index(params['schur_image']), ctx)
    elif params.get('h') is not None:
        h = CompactFunction(values=parse_lattice_map(params['h']), ctx=ctx)
    else:
        raise DomainError("forward needs --h or --schur-image")
    epsilon = float(params.get('epsilon') or 0.0)
    return JobOutcome(results={'value': forward_transform(h, alpha, epsilon), 'support': len(h.values)})


def _inverse_operand(params: Dict[str, Any], ctx: PrimeContext) -> SpectralFunction:
    if params.get('H') is not None:
        total = LaurentPoly({}, ctx.n)
        for m, c in sorted(parse_lattice_map(params['H']).items()):
            total = total + schur_laurent(m, False, ctx.n) * c
        return SpectralFunction(ctx, exact=total, symmetric=True, label="Schur combination")
    if params.get('lfactor_d') is not None:
        if ctx.n != 2:
            raise DomainError("L-factor operands live at rank n = 2", details={'n': ctx.n})
        return lfactor_spectral(int(params['lfactor_d']), parse_complex(params['s']), ctx.p)
    raise DomainError("inverse needs --H or --lfactor-d")


def run_inverse(params: Dict[str, Any], verbose: bool = False) -> JobOutcome:
    ctx = _context(params)
    H = _inverse_operand(params, ctx)
    N = params.get('N')
    method = params.get('method') or ('exact' if H.is_exact else 'quadrature')
    if method == 'exact' and not H.is_exact:
        raise DomainError("The exact method needs a Schur combination (--H)")
    if method == 'quadrature' and N is None and not H.is_exact:
        N = CONTOUR_DEFAULT_NODES

    if params.get('side') is not None:
        table_N = N if method == 'quadrature' else None
        if method == 'quadrature' and table_N is None:
            raise DomainError("Tabulating by quadrature needs --N")
        if table_N is not None and H.is_exact:
            H = SpectralFunction(ctx, evaluator=H.evaluate, symmetric=True, label=H.label)
        table = inverse_transform_table(H, int(params['side']), table_N, verbose=verbose)
        rows = [{'v': list(v), 'value': c} for v, c in table.items()]
        return JobOutcome(results={'method': method, 'N': table_N, 'values': rows}, rows=rows)

    v = parse_index(params['v'])
    if method == 'exact':
        value = inverse_transform_exact(H, v)
    else:
        N = int(N) if N is not None else exact_node_count(H, v)
        value = inverse_transform_quadrature(H, v, N)
    return JobOutcome(results={'method': method, 'N': N, 'v': list(v), 'value': value})


def run_pairing(params: Dict[str, Any], verbose: bool = False) -> JobOutcome:
    ctx = _context(params)
    alpha, beta = _spectral(params), _spectral(params, 'beta')
    pairing_params = RegularizedPairingParams(epsilon=params['epsilon'], truncation=params['M'])
    closed = stade_rhs(alpha, beta, pairing_params.epsilon, ctx)
    result = whittaker_pairing(alpha, beta, pairing_params, ctx)
    error = abs(result.value - closed)
    check = {
        'name': 'pairing vs product formula',
        'observed': result.value,
        'reference': closed,
        'error': error,
        'tolerance': result.tail_bound,
        'passed': error <= result.tail_bound,
    }
    return JobOutcome(results={'pairing': result.to_dict(), 'closed_form': closed},
                      checks=[check], passed=check['passed'], exit_code=0 if check['passed'] else 1)


def _suite_outcome(report: SuiteReport) -> JobOutcome:
    results = {
        'suite': report.suite,
        'seed': report.seed,
        'trials': report.trials,
        'params': report.params,
        'statistics': report.get_statistics(),
        'summary': report.summary,
    }
    checks = [c.to_dict() for c in report.checks]
    rows = [{k: v for k, v in c.items() if k != 'details'} for c in checks]
    return JobOutcome(results=results, checks=checks, passed=report.passed, rows=rows,
                      exit_code=report.exit_code)


def run_verify(suite: str, params: Dict[str, Any], verbose: bool = False) -> JobOutcome:
    seed, trials = params.get('seed', 0), params.get('trials')
    if suite == 'cauchy':
        report = verify_cauchy(n=params['n'], trials=trials, seed=seed, M=params['M'],
                               q_max=params['q_max'], tol=params['tol'], verbose=verbose)
    elif suite == 'stade':
        report = verify_stade(n=params['n'], p=params['p'], trials=trials, seed=seed,
                              epsilons=parse_list(params['epsilons'], float), M=params['M'], verbose=verbose)
    elif suite == 'inversion':
        report = verify_inversion(n=params['n'], p=params['p'], trials=trials, seed=seed,
                                  max_size=params['max_size'], points=params['points'], side=params['cube'],
                                  tol=params['tol'], geometric_tol=params['geometric_tol'], verbose=verbose)
    elif suite == 'plancherel':
        report = verify_plancherel(n=params['n'], p=params['p'], side=params['cube'], trials=trials,
                                   seed=seed, tol=params['tol'], verbose=verbose)
    elif suite == 'lfactor':
        report = verify_lfactor(ds=parse_list(params['d'], int), ps=parse_list(params['p'], int),
                                ss=parse_list(params['s'], complex), lambda_max=params['lambda_max'],
                                N=params['N'], tol=params['tol'], seed=seed, trials=trials,
                                integral_ps=parse_list(params['integral_p'], int),
                                integral_s=parse_complex(params['integral_s']), M=params['M'], verbose=verbose)
    else:
        report = verify_golden(params.get('file'), verbose=verbose)
    return _suite_outcome(report)


def run_lfactor_table(params: Dict[str, Any], verbose: bool = False) -> JobOutcome:
    s = parse_complex(params['s'])
    tol = params['tol']
    rows = lfactor_table(params['d'], params['p'], s, params['lambda_max'], params.get('N'), verbose=verbose)
    checks = []
    for row in rows:
        if not row.cross_checked:
            continue
        bound = tol * abs(row.closed) + LFACTOR_ABSOLUTE_FLOOR
        checks.append({
            'name': f"lambda={row.lam}",
            'observed': row.numeric,
            'reference': row.closed,
            'error': row.difference,
            'tolerance': bound,
            'passed': row.difference <= bound,
        })
    passed = all(c['passed'] for c in checks)
    table = [row.to_dict() for row in rows]
    results = {'rows': table, 'cross_checked': bool(checks)}
    if not checks:
        results['message'] = "no closed-form cross-check"
    return JobOutcome(results=results, checks=checks, passed=passed, rows=table,
                      exit_code=0 if passed else 1)


JOB_RUNNERS: Dict[str, Callable[[Dict[str, Any], bool], JobOutcome]] = {
    'schur': run_schur,
    'whittaker': run_whittaker,
    'forward': run_forward,
    'inverse': run_inverse,
    'pairing': run_pairing,
    'lfactor-table': run_lfactor_table,
}


def run_job(job: JobInputs, verbose: bool = False) -> JobOutcome:
    if job.command == 'verify':
        return run_verify(job.suite, dict(job.params), verbose)
    return JOB_RUNNERS[job.command](dict(job.params), verbose)


def render(job: JobSpec, outcome: JobOutcome) -> Tuple[Dict[str, Any], str]:
    """(document, serialized text in the job's format)"""
    generator = LabReportGenerator()
    document = build_document(job.command, job.inputs().model_dump(), outcome.results,
                              outcome.checks, outcome.passed)
    if job.output_format == 'csv':
        rows = outcome.rows if outcome.rows is not None else [outcome.results]
        return document, generator.generate_csv(rows)
    return document, generator.generate_json(document)


# ============================================================================
# Recheck and infrastructure test
# ============================================================================

def recheck_report(path: str) -> Tuple[Dict[str, Any], int]:
    """Re-run the job echoed in a saved JSON report and require identical bytes"""
    stored = JsonLoader.load_report(path)
    job = JobSpec(**stored.inputs.model_dump())
    _, regenerated = render(job, run_job(job))
    identical = regenerated == Path(path).read_text(encoding='utf-8')
    passed = identical and stored.passed
    document = build_document('recheck', {'file': Path(path).name, 'job': stored.inputs.model_dump()},
                              {'identical': identical, 'stored_passed': stored.passed}, passed=passed)
    return document, 0 if passed else 1


def run_infrastructure_tests() -> InfrastructureTestResult:
    modules = {}
    checks = {
        "LaurentPoly": "src.algebra.laurent.LaurentPoly",
        "schur_jacobi_trudi": "src.symmetric.schur.schur_jacobi_trudi",
        "schur_tableau_oracle": "src.symmetric.tableaux.schur_tableau_oracle",
        "whittaker_eval": "src.whittaker.spherical.whittaker_eval",
        "forward_transform": "src.transform.forward.forward_transform",
        "inverse_transform_exact": "src.transform.inverse.inverse_transform_exact",
        "whittaker_pairing": "src.transform.pairing.whittaker_pairing",
        "lfactor_flat_closed": "src.lfactors.flat_profiles.lfactor_flat_closed",
        "verify_integral_representation": "src.lfactors.integral_check.verify_integral_representation",
        "SuiteReport": "src.verification.suite_report.SuiteReport",
        "LabReportGenerator": "src.report.report_generator.LabReportGenerator",
        "JsonLoader": "src.common.json_loader.JsonLoader",
    }

    for name, path in checks.items():
        try:
            module_path, attr = path.rsplit(".", 1)
            module = __import__(module_path, fromlist=[attr])
            getattr(module, attr)
            modules[name] = True
        except Exception:
            modules[name] = False

    return InfrastructureTestResult(passed=all(modules.values()), modules=modules)


# ============================================================================
# Argument parsing
# ============================================================================

def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["json", "csv"], default=None,
                        help="Output format (default json; csv for lfactor-table)")
    parser.add_argument("--output", metavar="PATH", help="Write the report to PATH instead of stdout")
    parser.add_argument("--summary", action="store_true", help="Print a text summary to stderr")
    parser.add_argument("-v", "--verbose", action="store_true", help="Progress lines on stderr")


def _add_context(parser: argparse.ArgumentParser, n: Optional[int] = None, p: Optional[int] = None) -> None:
    parser.add_argument("--p", type=int, required=p is None, default=p, help="Prime p")
    parser.add_argument("--n", type=int, required=n is None, default=n, help="Rank n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="p-adic Whittaker transform toolkit",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python run_lab.py --test
  python run_lab.py whittaker --p 2 --n 2 --v 0 --alpha 1,1
  python run_lab.py verify plancherel --n 3 --p 2 --cube 3 --trials 20 --tol 1e-10
  python run_lab.py lfactor-table --d 3 --p 2 --s 2.5 --lambda-max 8
  python run_lab.py --recheck report.json
        """,
    )
    parser.add_argument("--test", action="store_true", help="Run infrastructure tests")
    parser.add_argument("--recheck", metavar="FILE", help="Re-run a saved JSON report and compare bytes")
    sub = parser.add_subparsers(dest="command")

    schur = sub.add_parser("schur", help="Evaluate a Schur polynomial s_m(alpha)")
    schur.add_argument("--m", required=True, help="Lattice index, e.g. 1,0")
    schur.add_argument("--alpha", required=True, help="Parameters, e.g. 1,2,3 or 1j,-1j")
    schur.add_argument("--method", choices=["jacobi-trudi", "bialternant", "tableau", "all"],
                       default="jacobi-trudi")
    _add_common(schur)

    whittaker = sub.add_parser("whittaker", help="Evaluate W_alpha at a valuation vector")
    _add_context(whittaker)
    whittaker.add_argument("--v", required=True, help="Valuation vector, e.g. 0,1")
    whittaker.add_argument("--alpha", required=True)
    _add_common(whittaker)

    forward = sub.add_parser("forward", help="Forward transform of a finitely supported h")
    _add_context(forward)
    forward.add_argument("--alpha", required=True)
    forward.add_argument("--h", help="Values as 'v:c;v:c', e.g. '0,0:1;1,2:0.5j'")
    forward.add_argument("--schur-image", help="Use the preimage of s_m for this m")
    forward.add_argument("--epsilon", type=float, default=0.0)
    _add_common(forward)

    inverse = sub.add_parser("inverse", help="Inverse transform of a symmetric torus function")
    _add_context(inverse)
    inverse.add_argument("--H", help="Schur combination as 'm:c;m:c'")
    inverse.add_argument("--lfactor-d", type=int, help="Use h_(s,p,d) at rank 2")
    inverse.add_argument("--s", help="Complex s for --lfactor-d")
    inverse.add_argument("--v", help="Valuation vector")
    inverse.add_argument("--side", type=int, help="Tabulate on the cube [0, side]^(n-1)")
    inverse.add_argument("--method", choices=["exact", "quadrature"])
    inverse.add_argument("--N", type=int, help="Quadrature nodes per circle")
    _add_common(inverse)

    pairing = sub.add_parser("pairing", help="Regularized Whittaker pairing vs the product formula")
    _add_context(pairing)
    pairing.add_argument("--alpha", required=True)
    pairing.add_argument("--beta", required=True)
    pairing.add_argument("--epsilon", type=float, default=0.0)
    pairing.add_argument("--M", type=int, default=40)
    _add_common(pairing)

    table = sub.add_parser("lfactor-table", help="Closed vs quadrature flat L-factor values")
    table.add_argument("--d", type=int, required=True)
    table.add_argument("--p", type=int, required=True)
    table.add_argument("--s", required=True)
    table.add_argument("--lambda-max", type=int, default=12)
    table.add_argument("--N", type=int, help="Fixed node count (default: doubling from 512)")
    table.add_argument("--tol", type=float, default=1e-8)
    _add_common(table)

    verify = sub.add_parser("verify", help="Seeded identity suites")
    suites = verify.add_subparsers(dest="suite")

    def suite_parser(name: str, trials: int, tol: Optional[float], help_text: str) -> argparse.ArgumentParser:
        sp = suites.add_parser(name, help=help_text)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--trials", type=int, default=trials)
        if tol is not None:
            sp.add_argument("--tol", type=float, default=tol)
        _add_common(sp)
        return sp

    cauchy = suite_parser("cauchy", 50, 1e-10, "Cauchy identity and determinant")
    cauchy.add_argument("--n", type=int, default=3)
    cauchy.add_argument("--M", type=int, default=60)
    cauchy.add_argument("--q-max", type=float, default=0.6)

    stade = suite_parser("stade", 50, None, "Stade-type pairing formula")
    _add_context(stade, n=3, p=2)
    stade.add_argument("--M", type=int, default=60)
    stade.add_argument("--epsilons", default="0.05,0.1,0.5")

    inversion = suite_parser("inversion", 20, 1e-9, "Spectral and geometric round trips")
    _add_context(inversion, n=3, p=2)
    inversion.add_argument("--max-size", type=int, default=6)
    inversion.add_argument("--points", type=int, default=25)
    inversion.add_argument("--cube", type=int, default=4)
    inversion.add_argument("--geometric-tol", type=float, default=1e-10)

    plancherel = suite_parser("plancherel", 20, 1e-10, "Geometric vs spectral pairing")
    _add_context(plancherel, n=3, p=2)
    plancherel.add_argument("--cube", type=int, default=3)

    lfactor = suite_parser("lfactor", 5, 1e-8, "Closed forms, oracle and integral representation")
    lfactor.add_argument("--d", default="1,2,3,4")
    lfactor.add_argument("--p", default="2,3,5")
    lfactor.add_argument("--s", default="2,2.5,3+0.5j")
    lfactor.add_argument("--lambda-max", type=int, default=12)
    lfactor.add_argument("--N", type=int, default=1024)
    lfactor.add_argument("--integral-p", default="2,3")
    lfactor.add_argument("--integral-s", default="2.5")
    lfactor.add_argument("--M", type=int, default=80)

    golden = suite_parser("golden", 0, None, "Recompute the bundled reference values")
    golden.add_argument("--file", help="Reference JSON (default data/reference/golden_values.json)")
    return parser


def job_from_args(args: argparse.Namespace) -> JobSpec:
    params = {k: v for k, v in vars(args).items() if k not in _NON_PARAMS and v is not None}
    output_format = args.format or ('csv' if args.command == 'lfactor-table' else 'json')
    return JobSpec(command=args.command, suite=getattr(args, 'suite', None), params=params,
                   output_format=output_format, output=args.output)


def _emit(content: str, output: Optional[str]) -> None:
    if output:
        if LabReportGenerator().save_report(content, output):
            success(f"Report written to {output}")
    else:
        sys.stdout.write(content)


def _validation_error(exc: ValidationError) -> Dict[str, Any]:
    return {
        'error': 'invalid_input',
        'message': "; ".join(err['msg'] for err in exc.errors()),
        'details': {'fields': [".".join(str(x) for x in err['loc']) for err in exc.errors()]},
    }


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    generator = LabReportGenerator()

    if args.test:
        result = run_infrastructure_tests()
        print("Infrastructure test result:", "PASSED" if result.passed else "FAILED")
        for name, status in result.modules.items():
            print(f"  {name:32} {'OK' if status else 'ERROR'}")
        return 0 if result.passed else 1

    if args.recheck:
        try:
            document, code = recheck_report(args.recheck)
        except ValidationError as exc:
            document, code = error_document('recheck', {'file': args.recheck}, _validation_error(exc)), 2
        except WhittakerLabError as exc:
            document, code = error_document('recheck', {'file': args.recheck}, exc.to_dict()), exc.exit_code
        sys.stdout.write(generator.generate_json(document))
        return code

    if args.command is None or (args.command == 'verify' and args.suite is None):
        parser.print_help()
        return 2

    inputs: Dict[str, Any] = {'command': args.command}
    try:
        job = job_from_args(args)
        inputs = job.inputs().model_dump()
        outcome = run_job(job.inputs(), verbose=args.verbose)
        document, content = render(job, outcome)
        code = outcome.exit_code
    except ValidationError as exc:
        document, code = error_document(args.command, inputs, _validation_error(exc)), 2
        content = generator.generate_json(document)
    except WhittakerLabError as exc:
        document, code = error_document(args.command, inputs, exc.to_dict()), exc.exit_code
        content = generator.generate_json(document)

    if 'error' in document:
        failure(f"{document['error']['error']}: {document['error']['message']}")
    _emit(content, args.output)
    if args.summary:
        print(generator.generate_text(document), file=sys.stderr)
    return code


__all__ = [
    "JobOutcome",
    "JOB_RUNNERS",
    "run_job",
    "render",
    "recheck_report",
    "run_infrastructure_tests",
    "build_parser",
    "job_from_args",
    "main",
]


if __name__ == "__main__":
    raise SystemExit(main())
