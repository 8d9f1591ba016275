"""Rich console output for diagnostics and interactive summaries."""

import logging
from typing import Any, Dict, List, Optional

from rich.console import Console
from rich.markup import escape
from rich.progress import BarColumn, Progress, SpinnerColumn, TaskProgressColumn, TextColumn
from rich.table import Table

from ...models.config import OutputConfig
from ...models.report import SuiteReport


logger = logging.getLogger(__name__)


class IndexConsole:
    """
    Rich-based console on stderr.

    Reports themselves go through :class:`ReportFormatter` to stdout or a
    file; this console only carries errors, warnings, progress and tables.
    """

    def __init__(self, config: Optional[OutputConfig] = None):
        """
        Initialize index console.

        Args:
            config: Output configuration
        """
        self.config = config or OutputConfig()
        self.console = Console(
            stderr=True,
            width=self.config.console_width,
            color_system="auto" if self.config.color_enabled else None,
        )

    def print_error(self, message: str) -> None:
        """Print an error line; engine messages such as ``[parse] ...`` are escaped."""
        self.console.print(f"[red]❌ {escape(message)}[/red]")

    def print_warning(self, message: str) -> None:
        self.console.print(f"[yellow]⚠️  {escape(message)}[/yellow]")

    def print_success(self, message: str) -> None:
        self.console.print(f"[green]✓[/green] {escape(message)}")

    def print_settings(self, settings: Dict[str, Any], title: str = "Settings") -> None:
        """Print a flat mapping of dotted keys to values as a table."""
        table = Table(title=title, show_header=True, header_style="bold magenta")
        table.add_column("Setting", style="cyan", no_wrap=True)
        table.add_column("Value", style="green")
        for key, value in settings.items():
            table.add_row(key, str(value))
        self.console.print(table)

    def print_suite_summary(self, report: SuiteReport) -> None:
        """Colored per-suite counts, shown after a suite run."""
        table = Table(title=f"Suites (seed {report.seed:#x})", show_header=True, header_style="bold magenta")
        table.add_column("Suite", style="bold")
        table.add_column("Pass", justify="right", style="green")
        table.add_column("Skip", justify="right", style="yellow")
        table.add_column("Fail", justify="right", style="red")
        table.add_column("Notes", style="dim")
        for summary in report.summaries:
            name = summary.name if summary.ok else f"[red]{summary.name}[/red]"
            table.add_row(
                name,
                str(summary.passed),
                str(summary.skipped),
                str(summary.failed),
                "; ".join(summary.warnings),
            )
        self.console.print(table)
        if report.ok:
            self.print_success("All suites passed")
        else:
            self.print_error(f"{report.failures} failed trial(s)")

    def print_list(self, heading: str, items: List[str]) -> None:
        self.console.print(f"\n[bold]{heading}:[/bold]")
        for item in items or ["(none)"]:
            self.console.print(f"  • {escape(item)}")

    def create_progress_bar(self) -> Progress:
        """Create a Rich progress bar for suite runs."""
        return Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            TaskProgressColumn(),
            console=self.console,
            transient=True,
        )
