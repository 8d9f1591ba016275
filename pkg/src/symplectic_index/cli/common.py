"""Helpers shared by the CLI commands."""

import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional, Type, TypeVar

import typer
from pydantic import BaseModel, ValidationError

from ..core.config import ConfigManager
from ..core.errors import EXIT_INPUT_ERROR, SymplecticIndexError
from ..core.output import IndexConsole, ReportFormatter
from ..models.config import Config, RunConfig


logger = logging.getLogger(__name__)

ModelT = TypeVar("ModelT", bound=BaseModel)


def console_from(ctx: typer.Context) -> IndexConsole:
    obj = ctx.obj or {}
    return obj.get("console") or IndexConsole()


def manager_from(ctx: typer.Context) -> ConfigManager:
    obj = ctx.obj or {}
    return obj.get("config_manager") or ConfigManager()


def resolve_config(ctx: typer.Context, run: RunConfig) -> Config:
    """Load the configuration and layer the run's flags over it."""
    console = console_from(ctx)
    try:
        config = run.apply(manager_from(ctx).get_config())
    except (ValueError, RuntimeError) as e:
        console.print_error(f"Invalid configuration: {e}")
        raise typer.Exit(EXIT_INPUT_ERROR)
    logger.debug(f"Run: {run.model_dump_json(exclude_none=True)}")
    return config


def _field_path(error: dict) -> str:
    return ".".join(str(part) for part in error.get("loc", ())) or "input"


def load_model(ctx: typer.Context, path: Path, model: Type[ModelT]) -> ModelT:
    """
    Read and validate a JSON input file.

    Validation errors are reported with the failing field, for example
    ``segments.0.S``, and exit with the input-error code.
    """
    console = console_from(ctx)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        console.print_error(f"Cannot read {path}: {e}")
        raise typer.Exit(EXIT_INPUT_ERROR)
    try:
        return model.model_validate_json(text)
    except ValidationError as e:
        for error in e.errors():
            console.print_error(f"{path.name}: {_field_path(error)}: {error['msg']}")
        raise typer.Exit(EXIT_INPUT_ERROR)


def read_text(ctx: typer.Context, path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8").strip()
    except OSError as e:
        console_from(ctx).print_error(f"Cannot read {path}: {e}")
        raise typer.Exit(EXIT_INPUT_ERROR)


@contextmanager
def index_errors(ctx: typer.Context) -> Iterator[None]:
    """Turn index-engine errors into a red line and the matching exit code."""
    try:
        yield
    except SymplecticIndexError as e:
        console_from(ctx).print_error(str(e))
        raise typer.Exit(e.exit_code)


def emit(
    ctx: typer.Context,
    config: Config,
    report: BaseModel,
    output: Optional[Path] = None,
    **context: object,
) -> None:
    """Write a formatted report to ``output`` or stdout."""
    formatter = ReportFormatter(config.output)
    content = formatter.format_report(report, **context)
    if output is None:
        typer.echo(content, nl=False)
        return
    try:
        formatter.save_to_file(content, output)
    except RuntimeError as e:
        console_from(ctx).print_error(str(e))
        raise typer.Exit(EXIT_INPUT_ERROR)
