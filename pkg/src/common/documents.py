"""
Document Models

pydantic models for everything read from or written to disk: the
reference value bundle, CLI jobs and saved reports.

Part of: whittaker_lab - p-adic Whittaker transform toolkit
"""

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, RootModel, field_validator, model_validator

from configs.lab_settings import REPORT_SCHEMA_VERSION

Command = Literal['schur', 'whittaker', 'forward', 'inverse', 'pairing', 'verify', 'lfactor-table']
Suite = Literal['cauchy', 'stade', 'inversion', 'plancherel', 'lfactor', 'golden']
GoldenKind = Literal['schur', 'whittaker', 'delta', 'local_lfactor', 'flat_closed', 'cauchy_rhs', 'stade_rhs']


class GoldenEntry(BaseModel):
    """One reference value: what to compute, with which inputs, and the expected [re, im]"""
    name: str
    kind: GoldenKind
    params: Dict[str, Any]
    expected: List[float] = Field(min_length=2, max_length=2)
    tolerance: float = Field(default=1e-12, gt=0.0)

    @property
    def expected_value(self) -> complex:
        return complex(self.expected[0], self.expected[1])


class GoldenValues(RootModel[List[GoldenEntry]]):
    """
    List of reference values
    """

    def get_all_entries(self) -> List[GoldenEntry]:
        return self.root

    def get_entries_by_kind(self, kind: str) -> List[GoldenEntry]:
        return [entry for entry in self.root if entry.kind == kind]

    def get_entry(self, name: str) -> Optional[GoldenEntry]:
        return next((entry for entry in self.root if entry.name == name), None)


class JobInputs(BaseModel):
    """The part of a job echoed into its report"""
    model_config = ConfigDict(frozen=True, extra='forbid')

    command: Command
    suite: Optional[Suite] = None
    params: Dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode='after')
    def _suite_for_verify(self) -> 'JobInputs':
        if self.command == 'verify' and self.suite is None:
            raise ValueError("verify needs a suite: cauchy, stade, inversion, plancherel, lfactor or golden")
        if self.command != 'verify' and self.suite is not None:
            raise ValueError(f"'{self.command}' takes no suite")
        return self


class JobSpec(JobInputs):
    """A full CLI job: inputs plus output format and destination"""
    output_format: Literal['json', 'csv'] = 'json'
    output: Optional[str] = None

    def inputs(self) -> JobInputs:
        return JobInputs(command=self.command, suite=self.suite, params=self.params)


class ReportDocument(BaseModel):
    """A saved JSON report, as parsed by --recheck"""
    model_config = ConfigDict(populate_by_name=True, extra='allow')

    schema_version: int = Field(alias='schema')
    command: str
    inputs: JobInputs
    results: Any = None
    checks: List[Dict[str, Any]] = Field(default_factory=list)
    passed: bool

    @field_validator('schema_version')
    @classmethod
    def _known_schema(cls, value: int) -> int:
        if value != REPORT_SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {value}, expected {REPORT_SCHEMA_VERSION}")
        return value


__all__ = [
    'Command',
    'Suite',
    'GoldenKind',
    'GoldenEntry',
    'GoldenValues',
    'JobInputs',
    'JobSpec',
    'ReportDocument',
]
