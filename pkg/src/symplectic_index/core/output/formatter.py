"""Output formatting for index and verification reports."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

from pydantic import BaseModel

from ...models.config import OutputConfig
from ...models.report import (
    DefectReport,
    DiagonalReport,
    HormanderReport,
    IndexReport,
    PushforwardReport,
    SeidelReport,
    SuiteReport,
    VerificationStatus,
)
from .templates import TemplateManager


logger = logging.getLogger(__name__)

# checked in order; DiagonalReport must precede its base class
_TEMPLATE_FOR = (
    (IndexReport, "index"),
    (DiagonalReport, "diagonal"),
    (DefectReport, "defect"),
    (HormanderReport, "hormander"),
    (PushforwardReport, "pushforward"),
    (SeidelReport, "seidel"),
    (SuiteReport, "suite"),
)


def record_line(model: BaseModel) -> str:
    """One JSON object with sorted keys; re-parses with ``model_validate_json``."""
    return json.dumps(model.model_dump(mode="json"), sort_keys=True, ensure_ascii=False)


class ReportFormatter:
    """Formats reports as deterministic text or JSON records."""

    def __init__(self, config: OutputConfig):
        """
        Initialize report formatter.

        Args:
            config: Output configuration
        """
        self.config = config
        self.templates = TemplateManager()

    def format_report(
        self,
        report: BaseModel,
        format_type: Optional[str] = None,
        **context: Any,
    ) -> str:
        """
        Format a report for output.

        Args:
            report: Any report model
            format_type: Output format (overrides config default)
            **context: Extra template variables for the text format

        Returns:
            Formatted output string, newline-terminated
        """
        output_format = format_type or self.config.format

        if output_format == "records":
            return self._format_records(report)
        elif output_format == "text":
            return self._format_text(report, context)
        else:
            raise ValueError(f"Unsupported output format: {output_format}")

    def _format_text(self, report: BaseModel, context: Dict[str, Any]) -> str:
        for model, template in _TEMPLATE_FOR:
            if isinstance(report, model):
                break
        else:
            raise ValueError(f"No text template for {type(report).__name__}")

        context.setdefault("show_crossings", self.config.show_crossings)
        context.setdefault("symmetry_residual", None)
        if isinstance(report, SuiteReport):
            context.setdefault(
                "failures", [r for r in report.records if r.status is VerificationStatus.FAIL]
            )
        return self.templates.render(template, report, **context)

    def _format_records(self, report: BaseModel) -> str:
        lines: List[str]
        if isinstance(report, SuiteReport):
            # trial records first, then one summary line per suite
            lines = [record_line(r) for r in report.records]
            lines.extend(record_line(s) for s in report.summaries)
        else:
            lines = [record_line(report)]
        return "".join(f"{line}\n" for line in lines)

    def save_to_file(self, content: str, file_path: Path) -> None:
        """
        Save formatted content to file.

        Args:
            content: Content to save
            file_path: Output file path
        """
        try:
            file_path.parent.mkdir(parents=True, exist_ok=True)
            file_path.write_text(content, encoding="utf-8")
            logger.info(f"Report saved to: {file_path}")
        except OSError as e:
            logger.error(f"Failed to save report: {e}")
            raise RuntimeError(f"Failed to save report to {file_path}: {e}")


def iter_records(text: str) -> Iterable[Dict[str, Any]]:
    """Parse a ``records`` output back into dictionaries, one per line."""
    for line in text.splitlines():
        if line.strip():
            yield json.loads(line)
