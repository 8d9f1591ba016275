"""Output formatting package: report text, JSON records and the Rich console."""

from .console import IndexConsole
from .formatter import ReportFormatter, iter_records, record_line
from .templates import TemplateManager

__all__ = [
    "IndexConsole",
    "ReportFormatter",
    "TemplateManager",
    "iter_records",
    "record_line",
]
