"""
╔═══════════════════════════════════════════════════════════════════════════╗
║                      whittaker_lab Report Generator                       ║
╚═══════════════════════════════════════════════════════════════════════════╝

Serializes job results as JSON (machine-readable, byte-deterministic),
CSV (complex columns split into _re / _im) and a coloured text summary.

JSON documents carry "schema": 1, the echoed job inputs, results,
per-check outcomes and the overall verdict. Keys are sorted, complex
numbers are [re, im] pairs and no timestamps are written, so identical
jobs give identical bytes.

Part of: whittaker_lab - p-adic Whittaker transform toolkit
"""

from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence

import numpy as np

from configs.lab_settings import REPORT_SCHEMA_VERSION
from src.report.console import (
    Colors,
    Icons,
    colorize,
    draw_header,
    draw_section,
    failure,
    format_table,
)

_TABLE_LIMIT = 40


def to_plain(value: Any) -> Any:
    """
    JSON-ready copy of a result tree

    complex -> [re, im]; numpy scalars/arrays -> Python values/lists;
    tuples -> lists; non-finite floats -> "inf" / "-inf" / "nan".
    """
    if isinstance(value, Mapping):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_plain(v) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        return [_plain_float(value.real), _plain_float(value.imag)]
    if isinstance(value, (float, np.floating)):
        return _plain_float(value)
    if hasattr(value, 'to_dict'):
        return to_plain(value.to_dict())
    return value


def _plain_float(x: float) -> Any:
    x = float(x)
    if math.isfinite(x):
        return x
    return "nan" if math.isnan(x) else ("inf" if x > 0 else "-inf")


def build_document(command: str,
                   inputs: Mapping[str, Any],
                   results: Any,
                   checks: Optional[Sequence[Mapping[str, Any]]] = None,
                   passed: bool = True) -> Dict[str, Any]:
    """Assemble the report document for one job"""
    return {
        'schema': REPORT_SCHEMA_VERSION,
        'command': command,
        'inputs': dict(inputs),
        'results': results,
        'checks': list(checks or []),
        'passed': bool(passed),
    }


def error_document(command: str, inputs: Mapping[str, Any], error: Mapping[str, Any]) -> Dict[str, Any]:
    """Document emitted when a job is rejected or diverges"""
    return {
        'schema': REPORT_SCHEMA_VERSION,
        'command': command,
        'inputs': dict(inputs),
        'error': dict(error),
        'passed': False,
    }


def flatten_row(row: Mapping[str, Any]) -> Dict[str, Any]:
    """Split complex cells into <key>_re / <key>_im; lists become ';'-joined text"""
    flat: Dict[str, Any] = {}
    for key, value in row.items():
        if isinstance(value, (complex, np.complexfloating)):
            flat[f"{key}_re"] = repr(float(value.real))
            flat[f"{key}_im"] = repr(float(value.imag))
        elif isinstance(value, (float, np.floating)):
            flat[key] = repr(float(value))
        elif isinstance(value, (list, tuple)):
            flat[key] = ";".join(str(v) for v in value)
        elif value is None:
            flat[key] = ""
        else:
            flat[key] = value
    return flat


class LabReportGenerator:
    """
    Report generator for job results

    Usage:
        generator = LabReportGenerator()
        document = build_document("verify", inputs, results, checks, passed)
        print(generator.generate_json(document))
        generator.save_report(generator.generate_csv(rows), "table.csv")
    """

    def __init__(self, use_colors: bool = True):
        self.use_colors = use_colors
        self.reports_generated = 0

    # ========================================================================
    # JSON / CSV
    # ========================================================================

    def generate_json(self, document: Mapping[str, Any]) -> str:
        self.reports_generated += 1
        return json.dumps(to_plain(document), indent=2, sort_keys=True) + "\n"

    def generate_csv(self, rows: Iterable[Mapping[str, Any]]) -> str:
        flat = [flatten_row(row) for row in rows]
        fields: List[str] = []
        for row in flat:
            fields.extend(key for key in row if key not in fields)
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(flat)
        self.reports_generated += 1
        return buffer.getvalue()

    # ========================================================================
    # Text summary
    # ========================================================================

    def generate_text(self, document: Mapping[str, Any], width: int = 72) -> str:
        """Coloured human-readable summary of a document"""
        lines = [draw_header(f"WHITTAKER LAB · {document.get('command', '').upper()}", width)]
        lines.append(self._format_verdict(document))

        inputs = document.get('inputs', {})
        lines.append(colorize(draw_section("Inputs"), Colors.SECONDARY + Colors.BRIGHT))
        params = inputs.get('params', {})
        if inputs.get('suite'):
            lines.append(f"  suite: {inputs['suite']}")
        for key in sorted(params):
            lines.append(f"  {key}: {params[key]}")

        if 'error' in document:
            error = document['error']
            lines.append(colorize(draw_section("Error"), Colors.ERROR + Colors.BRIGHT))
            lines.append(f"  {error.get('error')}: {error.get('message')}")
            return "\n".join(lines)

        checks = document.get('checks') or []
        if checks:
            lines.append(colorize(draw_section(f"Checks ({len(checks)})"), Colors.SECONDARY + Colors.BRIGHT))
            lines.extend(self._format_checks(checks))
        results = document.get('results')
        if isinstance(results, Mapping) and 'summary' in results:
            lines.append(colorize(draw_section("Summary"), Colors.SECONDARY + Colors.BRIGHT))
            lines.extend(f"  {line}" for line in str(results['summary']).splitlines())
        return "\n".join(lines)

    def _format_verdict(self, document: Mapping[str, Any]) -> str:
        if 'error' in document:
            return colorize(f"  {Icons.CROSS} REJECTED: {document['error'].get('error')}", Colors.ERROR + Colors.BRIGHT)
        if document.get('passed'):
            return colorize(f"  {Icons.CHECKMARK} PASSED", Colors.SUCCESS + Colors.BRIGHT)
        return colorize(f"  {Icons.WARNING} NOT PASSED", Colors.WARNING + Colors.BRIGHT)

    def _format_checks(self, checks: Sequence[Mapping[str, Any]]) -> List[str]:
        # failing checks first, then the rest up to the limit
        ordered = sorted(checks, key=lambda c: c.get('passed', False))[:_TABLE_LIMIT]
        rows = []
        for check in ordered:
            error = check.get('error')
            rows.append([
                Icons.CHECKMARK if check.get('passed') else Icons.CROSS,
                str(check.get('name', '')),
                "n/a" if error is None else f"{float(error):.2e}",
                f"{float(check.get('tolerance', 0.0)):.1e}",
            ])
        lines = ["  " + line for line in format_table(["", "check", "error", "tol"], rows)]
        if len(checks) > _TABLE_LIMIT:
            lines.append(colorize(f"  ... {len(checks) - _TABLE_LIMIT} more", Colors.DIM))
        return lines

    # ========================================================================
    # Files
    # ========================================================================

    def save_report(self, content: str, filepath: str) -> bool:
        """Write a generated report; parent directories are created"""
        try:
            path = Path(filepath)
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, 'w', encoding='utf-8', newline='') as f:
                f.write(content)
            return True
        except OSError as e:
            failure(f"Error saving report: {e}")
            return False


def quick_report(document: Mapping[str, Any], format: str = "json",
                 rows: Optional[Iterable[Mapping[str, Any]]] = None) -> str:
    """
    One-shot serialization

    Raises:
        ValueError: unknown format
    """
    generator = LabReportGenerator()
    if format == "json":
        return generator.generate_json(document)
    if format == "csv":
        return generator.generate_csv(rows if rows is not None else [document.get('results', {})])
    if format == "text":
        return generator.generate_text(document)
    raise ValueError(f"Unknown format: {format}. Use 'json', 'csv' or 'text'")


__all__ = [
    'to_plain',
    'build_document',
    'error_document',
    'flatten_row',
    'LabReportGenerator',
    'quick_report',
]
