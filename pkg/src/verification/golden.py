"""
Reference Value Check

Recomputes every entry of data/reference/golden_values.json and compares
it with the stored value.

Part of: whittaker_lab - p-adic Whittaker transform toolkit
"""

from pathlib import Path
from typing import Callable, Dict, Optional, Union

from configs.lab_settings import GOLDEN_VALUES_PATH
from src.common.documents import GoldenEntry
from src.common.json_loader import JsonLoader
from src.common.models import LFactorQuery, PrimeContext, SpectralParams
from src.lfactors.flat_profiles import lfactor_flat_closed
from src.lfactors.local_factors import local_lfactor
from src.report.console import step
from src.symmetric.cauchy import cauchy_rhs
from src.symmetric.schur import schur_jacobi_trudi
from src.transform.pairing import stade_rhs
from src.verification.suite_report import SuiteReport, relative_error
from src.whittaker.spherical import delta, whittaker_eval


def _alpha(params: Dict, key: str = 'alpha') -> tuple:
    return SpectralParams(alpha=params[key]).alpha


def _ctx(params: Dict) -> PrimeContext:
    return PrimeContext(p=params['p'], n=params['n'])


GOLDEN_EVALUATORS: Dict[str, Callable[[Dict], complex]] = {
    'schur': lambda q: schur_jacobi_trudi(q['m'], _alpha(q)),
    'whittaker': lambda q: whittaker_eval(_alpha(q), q['v'], _ctx(q)),
    'delta': lambda q: complex(delta(q['v'], _ctx(q))),
    'local_lfactor': lambda q: local_lfactor(LFactorQuery(d=q['d'], alpha=q['alpha'], p=q['p'], s=q['s'])),
    'flat_closed': lambda q: lfactor_flat_closed(q['d'], q['lambda'], q['p'], complex(q['s'])),
    'cauchy_rhs': lambda q: cauchy_rhs(_alpha(q), _alpha(q, 'beta')),
    'stade_rhs': lambda q: stade_rhs(_alpha(q), _alpha(q, 'beta'), q['epsilon'], _ctx(q)),
}


def evaluate_golden(entry: GoldenEntry) -> complex:
    return complex(GOLDEN_EVALUATORS[entry.kind](entry.params))


def verify_golden(path: Optional[Union[str, Path]] = None, verbose: bool = False) -> SuiteReport:
    """Recompute the bundled reference values"""
    path = Path(path) if path is not None else GOLDEN_VALUES_PATH
    golden = JsonLoader.load_golden_values(path)
    report = SuiteReport("golden", params={'file': path.name, 'entries': len(golden.get_all_entries())})
    if verbose:
        step(f"[1/1] Recomputing {len(golden.get_all_entries())} reference values")

    for entry in golden.get_all_entries():
        value = evaluate_golden(entry)
        report.compare(entry.name, value, entry.expected_value, entry.tolerance,
                       error=relative_error(value, entry.expected_value), kind=entry.kind)
    report.finalize()
    return report


__all__ = [
    'GOLDEN_EVALUATORS',
    'evaluate_golden',
    'verify_golden',
]
