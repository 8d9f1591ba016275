"""Seeded verification suite command."""

import logging
from pathlib import Path
from typing import List, Optional

import typer

from ...core.errors import EXIT_INPUT_ERROR, EXIT_VERIFICATION_FAILURE
from ...core.suites import SuiteRunner
from ...models.config import RunConfig
from ..common import console_from, emit, resolve_config


logger = logging.getLogger(__name__)


def run_suite(
    ctx: typer.Context,
    seed: Optional[int] = typer.Option(None, "--seed", help="Master seed (default 0xC0FFEE)"),
    trials: Optional[int] = typer.Option(None, "--trials", help="Trials per suite and dimension (default: per suite)"),
    only: List[str] = typer.Option([], "--suite", "-s", help="Run only these suites (repeatable)"),
    dims: List[int] = typer.Option([], "--dim", help="Half-dimensions to test (repeatable; default: per suite)"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Base tolerance"),
    grid: Optional[int] = typer.Option(None, "--grid", help="Scan resolution"),
    output_format: Optional[str] = typer.Option(None, "--format", help="text or records"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write the report to a file"),
    summary: bool = typer.Option(True, "--summary/--no-summary", help="Show a summary table on stderr"),
) -> None:
    """Run the randomized and oracle verification suites."""
    run = RunConfig(
        command="suite",
        seed=seed,
        trials=trials,
        tol=tol,
        grid=grid,
        output=str(output) if output else None,
        format=output_format,
    )
    config = resolve_config(ctx, run)
    console = console_from(ctx)
    if only or dims:
        try:
            config = config.with_overrides(suite={"suites": only or None, "dims": dims or None})
        except ValueError as e:
            console.print_error(f"Invalid suite selection: {e}")
            raise typer.Exit(EXIT_INPUT_ERROR)

    runner = SuiteRunner(config)
    with console.create_progress_bar() as progress:
        task = progress.add_task("Running suites", total=None)

        def advance(label: str, done: int, total: int) -> None:
            progress.update(task, description=f"{label} {done}/{total}")

        report = runner.run(advance)

    emit(ctx, config, report, output)
    if summary:
        console.print_suite_summary(report)
    if config.suite.trials == 0:
        console.print_warning("0 trials: suites pass vacuously")
    if not report.ok:
        raise typer.Exit(EXIT_VERIFICATION_FAILURE)
