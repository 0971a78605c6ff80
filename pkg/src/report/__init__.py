"""
Report Generation

Console helpers and JSON / CSV / text serializers for lab results.
"""

from .console import (
    colorize,
    draw_header,
    failure,
    info,
    step,
    success,
    warning,
)
from .report_generator import (
    LabReportGenerator,
    build_document,
    error_document,
    quick_report,
    to_plain,
)

__all__ = [
    'colorize',
    'draw_header',
    'failure',
    'info',
    'step',
    'success',
    'warning',
    'LabReportGenerator',
    'build_document',
    'error_document',
    'quick_report',
    'to_plain',
]
