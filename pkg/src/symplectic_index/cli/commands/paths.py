"""Path commands: index, double and diagonal."""

import logging
from pathlib import Path
from typing import Optional, Tuple

import typer

from ...core.czindex import cz_lagrangian, cz_periodic
from ...core.doubling import HalfPathData, double_path, verify_diagonal, verify_index_theorem
from ...core.errors import EXIT_DEGENERACY, EXIT_VERIFICATION_FAILURE
from ...core.maslov import SymplecticPathSpec, extend_to
from ...models.config import RunConfig
from ...models.pathspec import PathSpecFile
from ...models.report import DefectReport, IndexFlavor, VerificationStatus
from ..common import console_from, emit, index_errors, load_model, resolve_config


logger = logging.getLogger(__name__)


def _load_path(ctx: typer.Context, file: Path, duration: Optional[float]) -> Tuple[PathSpecFile, SymplecticPathSpec]:
    spec_file = load_model(ctx, file, PathSpecFile)
    with index_errors(ctx):
        spec = spec_file.to_spec()
        if duration is not None:
            spec = extend_to(spec, duration)
    return spec_file, spec


def _exit_for(ctx: typer.Context, report: DefectReport) -> None:
    console = console_from(ctx)
    if report.status is VerificationStatus.SKIP:
        console.print_warning(f"Nondegeneracy condition failed: {report.skipped_condition}")
        raise typer.Exit(EXIT_DEGENERACY)
    if report.status is VerificationStatus.FAIL:
        console.print_error("Index identity does not hold")
        raise typer.Exit(EXIT_VERIFICATION_FAILURE)


def run_index(
    ctx: typer.Context,
    file: Path = typer.Argument(..., help="Path specification (JSON)"),
    flavor: Optional[IndexFlavor] = typer.Option(None, "--flavor", help="lagrangian or periodic"),
    duration: Optional[float] = typer.Option(None, "--duration", help="Stretch the last segment to end at T"),
    require_nondegenerate: bool = typer.Option(
        False, "--require-nondegenerate", help="Fail when 1 - F(T) is singular (periodic flavor)"
    ),
    tol: Optional[float] = typer.Option(None, "--tol", help="Base tolerance"),
    grid: Optional[int] = typer.Option(None, "--grid", help="Scan resolution"),
    output_format: Optional[str] = typer.Option(None, "--format", help="text or records"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write the report to a file"),
) -> None:
    """Conley-Zehnder index of a symplectic path."""
    run = RunConfig(
        command="index",
        input_path=str(file),
        tol=tol,
        grid=grid,
        output=str(output) if output else None,
        format=output_format,
        flavor=flavor.value if flavor else None,
        duration=duration,
        require_nondegenerate=require_nondegenerate,
    )
    config = resolve_config(ctx, run)
    spec_file, spec = _load_path(ctx, file, duration)
    chosen = flavor or spec_file.flavor or IndexFlavor.LAGRANGIAN

    numerics = config.numerics
    with index_errors(ctx):
        if chosen is IndexFlavor.PERIODIC:
            report = cz_periodic(spec, require_nondegenerate, tol=numerics.tol, grid=numerics.grid)
        else:
            report = cz_lagrangian(spec, spec_file.to_seed_frame(), tol=numerics.tol, grid=numerics.grid)
    emit(ctx, config, report, output)


def run_double(
    ctx: typer.Context,
    file: Path = typer.Argument(..., help="Half-path specification (JSON), starting at the identity"),
    duration: Optional[float] = typer.Option(None, "--duration", help="Stretch the last segment to end at T"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Base tolerance"),
    grid: Optional[int] = typer.Option(None, "--grid", help="Scan resolution"),
    output_format: Optional[str] = typer.Option(None, "--format", help="text or records"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write the report to a file"),
) -> None:
    """Double a half-path and check μ₊ + μ₋ - μ_loop = ½·sign Q."""
    run = RunConfig(
        command="double",
        input_path=str(file),
        tol=tol,
        grid=grid,
        output=str(output) if output else None,
        format=output_format,
        duration=duration,
    )
    config = resolve_config(ctx, run)
    spec_file, spec = _load_path(ctx, file, duration)

    numerics = config.numerics
    with index_errors(ctx):
        reference = spec_file.to_seed_frame() if spec_file.seed_frame is not None else None
        data = HalfPathData(spec, reference=reference)
        doubled = double_path(data)
        report = verify_index_theorem(
            data, numerics.tol, numerics.grid, numerics.nondegeneracy_margin, doubled=doubled
        )
    emit(ctx, config, report, output, symmetry_residual=doubled.symmetry_residual())
    _exit_for(ctx, report)


def run_diagonal(
    ctx: typer.Context,
    file: Path = typer.Argument(..., help="Path φ on [0, T] (JSON), starting at the identity"),
    duration: Optional[float] = typer.Option(None, "--duration", help="Stretch the last segment to end at T"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Base tolerance"),
    grid: Optional[int] = typer.Option(None, "--grid", help="Scan resolution"),
    output_format: Optional[str] = typer.Option(None, "--format", help="text or records"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write the report to a file"),
) -> None:
    """Diagonal double of φ: sign Q = 0, μ_loop = 2·μ_half and μ_half = cz_periodic(φ)."""
    run = RunConfig(
        command="diagonal",
        input_path=str(file),
        tol=tol,
        grid=grid,
        output=str(output) if output else None,
        format=output_format,
        duration=duration,
    )
    config = resolve_config(ctx, run)
    _, spec = _load_path(ctx, file, duration)

    numerics = config.numerics
    with index_errors(ctx):
        report = verify_diagonal(spec, numerics.tol, numerics.grid, numerics.nondegeneracy_margin)
    emit(ctx, config, report, output)
    _exit_for(ctx, report)
