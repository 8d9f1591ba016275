"""Novikov pushforward command."""

from pathlib import Path
from typing import Optional

import typer

from ...core.errors import ErrorCode, NovikovError
from ...core.novikov import (
    SEIDEL_SOURCE,
    albers_delta1_pushforward,
    format_element,
    parse_element,
    verify_seidel_pushforward,
)
from ...models.config import RunConfig
from ...models.report import PushforwardReport, VerificationStatus
from ..common import emit, index_errors, read_text, resolve_config


def run_novikov(
    ctx: typer.Context,
    file: Optional[Path] = typer.Argument(None, help="Text file holding a Novikov element of M"),
    golden: bool = typer.Option(False, "--golden", help="Compare the Seidel pushforward with its known value"),
    output_format: Optional[str] = typer.Option(None, "--format", help="text or records"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write the report to a file"),
) -> None:
    """Push a Novikov element of S²×S² × S²×S² forward to S²×S² and print it canonically."""
    run = RunConfig(
        command="novikov",
        input_path=str(file) if file else None,
        output=str(output) if output else None,
        format=output_format,
        golden=golden,
    )
    config = resolve_config(ctx, run)
    text = read_text(ctx, file) if file is not None else SEIDEL_SOURCE

    with index_errors(ctx):
        element = parse_element(text)
        if not golden:
            image = albers_delta1_pushforward(element)
            report = PushforwardReport(source=format_element(element), image=format_element(image))
            emit(ctx, config, report, output)
            return
        verdict = verify_seidel_pushforward(element)
        emit(ctx, config, verdict, output)
        if verdict.status is not VerificationStatus.PASS:
            raise NovikovError(
                ErrorCode.MISMATCH,
                f"Seidel pushforward does not match: {len(verdict.missing)} missing, "
                f"{len(verdict.unexpected)} unexpected term(s)",
            )
