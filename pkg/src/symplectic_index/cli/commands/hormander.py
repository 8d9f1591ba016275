"""Hörmander index command."""

from pathlib import Path
from typing import List, Optional

import numpy as np
import typer

from ...core.czindex import compute_hormander, hormander_signature
from ...core.symlin import LagrangianFrame, SympSpace, random_lagrangian
from ...models.config import RunConfig
from ...models.pathspec import HormanderFile
from ...models.report import HormanderReport
from ..common import emit, index_errors, load_model, resolve_config


def run_hormander(
    ctx: typer.Context,
    file: Optional[Path] = typer.Argument(None, help="Frames A, B, C, D or L, K, Lp (JSON)"),
    n: int = typer.Option(1, "--n", min=1, max=8, help="Half-dimension of a random quadruple"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for random frames and auxiliary draws"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Base tolerance"),
    grid: Optional[int] = typer.Option(None, "--grid", help="Scan resolution"),
    output_format: Optional[str] = typer.Option(None, "--format", help="text or records"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write the report to a file"),
) -> None:
    """
    Hörmander index s(A, B; C, D).

    A triple L, K, Lp is read as s(L, K; K, Lp) and also evaluated by the
    signature formula. Without a file a random quadruple is drawn from
    the seed.
    """
    run = RunConfig(
        command="hormander",
        input_path=str(file) if file else None,
        seed=seed,
        tol=tol,
        grid=grid,
        output=str(output) if output else None,
        format=output_format,
    )
    config = resolve_config(ctx, run)
    rng = np.random.default_rng(config.suite.seed)

    frames: List[LagrangianFrame]
    triple = False
    if file is not None:
        spec = load_model(ctx, file, HormanderFile)
        with index_errors(ctx):
            frames = spec.frames()
        triple = spec.is_triple
    else:
        space = SympSpace.standard(n)
        frames = [random_lagrangian(space, rng) for _ in range(4)]

    numerics = config.numerics
    with index_errors(ctx):
        if triple:
            first, second, third = frames
            report = compute_hormander(
                first, second, second, third, rng, numerics.tol, numerics.grid, numerics.hormander_attempts
            )
            formula = hormander_signature(first, second, third, tol=numerics.nondegeneracy_margin)
            report = HormanderReport(
                value_twice=report.value_twice, signature_twice=formula.twice, attempts=report.attempts
            )
        else:
            report = compute_hormander(*frames, rng, numerics.tol, numerics.grid, numerics.hormander_attempts)
    emit(ctx, config, report, output)
