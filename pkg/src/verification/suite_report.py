"""
Verification Report Structures

One CheckResult per compared quantity, collected in a SuiteReport that
derives counts, the pass verdict and a text summary once finalized.

Part of: whittaker_lab - p-adic Whittaker transform toolkit
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional


class CheckStatus(Enum):
    """Outcome of a single check"""
    PASSED = "passed"
    FAILED = "failed"
    DIVERGED = "diverged"    # series could not be certified; not a mismatch


@dataclass
class CheckResult:
    """
    A computed value compared against a reference

    `error` is whatever the check measures (absolute, relative or a
    bound excess); the check passes when error <= tolerance.
    """
    name: str
    observed: Any
    reference: Any
    error: Optional[float]
    tolerance: float
    status: CheckStatus
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASSED

    def get_summary(self) -> str:
        error = "n/a" if self.error is None else f"{self.error:.3e}"
        return f"{self.status.value.upper()}: {self.name} (error {error}, tol {self.tolerance:.1e})"

    def to_dict(self) -> Dict:
        return {
            'name': self.name,
            'observed': self.observed,
            'reference': self.reference,
            'error': self.error,
            'tolerance': self.tolerance,
            'status': self.status.value,
            'passed': self.passed,
            'details': self.details,
        }

    def __str__(self) -> str:
        return self.get_summary()


def relative_error(observed: complex, reference: complex, floor: float = 1.0) -> float:
    """|observed - reference| / max(floor, |reference|)"""
    return abs(observed - reference) / max(floor, abs(reference))


def _error_ratio(check: CheckResult) -> float:
    if check.tolerance > 0:
        return check.error / check.tolerance
    return 0.0 if check.error == 0 else float('inf')


class SuiteReport:
    """
    All checks of one verification suite

    Usage:
        report = SuiteReport("cauchy", seed=0, trials=50, params={'n': 3})
        report.compare("trial 0", lhs, rhs, tolerance=1e-10)
        report.finalize()
        print(report.summary)
    """

    def __init__(self, suite: str, seed: int = 0, trials: int = 0, params: Optional[Dict[str, Any]] = None):
        self.suite = suite
        self.seed = seed
        self.trials = trials
        self.params: Dict[str, Any] = dict(params or {})

        self.checks: List[CheckResult] = []

        self.passed_count = 0
        self.failed_count = 0
        self.diverged_count = 0

        self.passed: bool = False
        self.summary: str = ""

    def add_check(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        if check.status == CheckStatus.PASSED:
            self.passed_count += 1
        elif check.status == CheckStatus.DIVERGED:
            self.diverged_count += 1
        else:
            self.failed_count += 1
        return check

    def compare(self,
                name: str,
                observed: Any,
                reference: Any,
                tolerance: float,
                error: Optional[float] = None,
                **details: Any) -> CheckResult:
        """Record a check; the default error is |observed - reference|"""
        if error is None:
            error = float(abs(observed - reference))
        status = CheckStatus.PASSED if error <= tolerance else CheckStatus.FAILED
        return self.add_check(CheckResult(name, observed, reference, error, tolerance, status, details))

    def diverged(self, name: str, message: str, **details: Any) -> CheckResult:
        details['message'] = message
        return self.add_check(CheckResult(name, None, None, None, 0.0, CheckStatus.DIVERGED, details))

    @property
    def exit_code(self) -> int:
        """0 all passed, 1 some mismatch, 3 some series diverged"""
        if self.diverged_count:
            return 3
        return 0 if self.passed else 1

    def finalize(self) -> None:
        """Compute the verdict; call after all checks are recorded"""
        self.passed = bool(self.checks) and self.failed_count == 0 and self.diverged_count == 0
        self.summary = self._generate_summary()

    def _generate_summary(self) -> str:
        verdict = "ALL CHECKS PASSED" if self.passed else "CHECKS FAILED"
        if self.diverged_count and not self.failed_count:
            verdict = "DIVERGENCE REPORTED"
        worst = self.worst_check()
        lines = [
            f"verify {self.suite}: {verdict}",
            f"Checks: {len(self.checks)}  passed {self.passed_count}  "
            f"failed {self.failed_count}  diverged {self.diverged_count}",
            f"Seed: {self.seed}  Trials: {self.trials}",
        ]
        if worst is not None:
            lines.append(f"Largest error/tolerance: {worst.name}")
        return "\n".join(lines)

    def worst_check(self) -> Optional[CheckResult]:
        """Check with the largest error relative to its tolerance"""
        scored = [c for c in self.checks if c.error is not None]
        if not scored:
            return None
        return max(scored, key=_error_ratio)

    def get_failed_checks(self) -> List[CheckResult]:
        return [c for c in self.checks if c.status == CheckStatus.FAILED]

    def get_diverged_checks(self) -> List[CheckResult]:
        return [c for c in self.checks if c.status == CheckStatus.DIVERGED]

    def get_statistics(self) -> Dict:
        return {
            'checks': len(self.checks),
            'passed': self.passed_count,
            'failed': self.failed_count,
            'diverged': self.diverged_count,
        }

    def to_dict(self) -> Dict:
        return {
            'suite': self.suite,
            'seed': self.seed,
            'trials': self.trials,
            'params': self.params,
            'statistics': self.get_statistics(),
            'checks': [c.to_dict() for c in self.checks],
            'passed': self.passed,
            'summary': self.summary,
        }


__all__ = [
    'CheckStatus',
    'CheckResult',
    'relative_error',
    'SuiteReport',
]
