"""Conley-Zehnder indices of symplectic paths."""

import logging
import math
from typing import List, Optional

import numpy as np
import scipy.linalg

from ...models.report import CrossingRecord, IndexFlavor, IndexReport
from ..errors import CrossingError, ErrorCode
from ..maslov import (
    DEFAULT_GRID,
    Crossing,
    LagrangianPath,
    Segment,
    SymplecticPathSpec,
    compute_maslov,
)
from ..symlin import DEFAULT_TOL, LagrangianFrame, SymplecticMatrix, diagonal, horizontal


logger = logging.getLogger(__name__)


def crossing_records(crossings: List[Crossing]) -> List[CrossingRecord]:
    return [
        CrossingRecord(
            time=c.time,
            kind=c.kind.value,
            dimension=c.dimension,
            signatures=list(c.signatures),
            weight_twice=c.weight_twice,
        )
        for c in crossings
    ]


def _report(path: LagrangianPath, reference: LagrangianFrame, flavor: IndexFlavor,
            tol: float, grid: int) -> IndexReport:
    result = compute_maslov(path, reference, tol=tol, grid_size=grid)
    return IndexReport(
        value_twice=result.value.twice,
        crossings=crossing_records(result.crossings),
        convention_tag=flavor,
        duration=path.duration,
    )


def cz_lagrangian(
    spec: SymplecticPathSpec,
    reference: Optional[LagrangianFrame] = None,
    tol: float = DEFAULT_TOL,
    grid: int = DEFAULT_GRID,
) -> IndexReport:
    """
    Lagrangian Conley-Zehnder index μ(F(t)·V, V).

    Args:
        spec: Symplectic path F
        reference: Lagrangian V; defaults to ℝⁿ
        tol: Base tolerance
        grid: Scan resolution

    Returns:
        Index report with the crossings
    """
    if reference is None:
        reference = horizontal(spec.space)
    return _report(LagrangianPath(spec, reference), reference, IndexFlavor.LAGRANGIAN, tol, grid)


def graph_path(spec: SymplecticPathSpec) -> SymplecticPathSpec:
    """diag(F(t), 1) on (V ⊕ V, Ω ⊕ -Ω); applied to △ it traces the graph of F(t)."""
    doubled = spec.space.doubled()
    zero = np.zeros((spec.space.dim, spec.space.dim))
    segments = tuple(
        Segment(scipy.linalg.block_diag(s.generator, zero), s.duration) for s in spec.segments
    )
    start = SymplecticMatrix(
        scipy.linalg.block_diag(spec.start_matrix, np.eye(spec.space.dim)), doubled
    )
    return SymplecticPathSpec(doubled, segments, start)


def monodromy_gap(spec: SymplecticPathSpec) -> float:
    """Smallest singular value of 1 - F(T); zero exactly when 1 is an eigenvalue."""
    return float(scipy.linalg.svdvals(np.eye(spec.space.dim) - spec.end_matrix)[-1])


def cz_periodic(
    spec: SymplecticPathSpec,
    require_nondegenerate: bool = False,
    tol: float = DEFAULT_TOL,
    grid: int = DEFAULT_GRID,
) -> IndexReport:
    """
    Periodic Conley-Zehnder index μ((F(t), 1)·△, △) in the doubled space.

    Raises:
        CrossingError: DEGENERATE_ENDPOINT when 1 - F(T) is singular and
            nondegeneracy was requested
    """
    gap = monodromy_gap(spec)
    if gap <= math.sqrt(tol):
        if require_nondegenerate:
            raise CrossingError(
                ErrorCode.DEGENERATE_ENDPOINT,
                f"1 - F(T) is singular (smallest singular value {gap:.3e})",
                time=spec.duration,
            )
        logger.debug(f"Monodromy has eigenvalue 1 (gap {gap:.3e}); endpoint counts half")
    carrier = graph_path(spec)
    reference = diagonal(carrier.space)
    return _report(LagrangianPath(carrier, reference), reference, IndexFlavor.PERIODIC, tol, grid)
