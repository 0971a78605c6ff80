"""
Load JSON documents into their pydantic models
"""

from pathlib import Path
from typing import Union

from configs.lab_settings import GOLDEN_VALUES_PATH
from src.common.documents import GoldenValues, ReportDocument
from src.common.errors import ConfigurationError

PathLike = Union[str, Path]


def _read(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding='utf-8')
    except OSError as exc:
        raise ConfigurationError(f"cannot read {path}: {exc.strerror or exc}", {'path': str(path)}) from exc


class JsonLoader:
    """
    Load Json Files
    """
    @staticmethod
    def load_golden_values(path: PathLike = GOLDEN_VALUES_PATH) -> GoldenValues:
        """
        Load the reference value bundle
        """
        return GoldenValues.model_validate_json(_read(path))

    @staticmethod
    def load_report(path: PathLike) -> ReportDocument:
        """
        Load a saved JSON report
        """
        return ReportDocument.model_validate_json(_read(path))


__all__ = ['JsonLoader']
