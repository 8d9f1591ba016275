"""Robbin-Salamon Maslov index of Lagrangian paths."""

import logging
import math
from dataclasses import dataclass
from typing import List

from ..symlin import DEFAULT_TOL, LagrangianFrame
from .crossings import (
    DEFAULT_GRID,
    Crossing,
    find_crossings,
    find_relative_crossings,
)
from .half_integer import HalfInteger
from .path import LagrangianPath


logger = logging.getLogger(__name__)


# Largest distance of the summed weights from ½ℤ before the index is rejected.
RESIDUAL_TOL = 1e-6


@dataclass(frozen=True)
class MaslovResult:
    """Index value together with the crossings it was summed from."""

    value: HalfInteger
    crossings: List[Crossing]


def _sum(crossings: List[Crossing]) -> HalfInteger:
    # endpoints weigh ½, interior crossings 1, junctions ½ per side
    raw = math.fsum(c.weight for c in crossings)
    return HalfInteger.from_float(raw, tol=RESIDUAL_TOL)


def compute_maslov(
    path: LagrangianPath,
    reference: LagrangianFrame,
    tol: float = DEFAULT_TOL,
    grid_size: int = DEFAULT_GRID,
) -> MaslovResult:
    """Maslov index of Λ(t) against a fixed V, with its crossings."""
    crossings = find_crossings(path, reference, tol=tol, grid_size=grid_size)
    value = _sum(crossings)
    logger.debug(f"μ = {value} from {len(crossings)} crossing(s)")
    return MaslovResult(value=value, crossings=crossings)


def maslov_index(
    path: LagrangianPath,
    reference: LagrangianFrame,
    tol: float = DEFAULT_TOL,
    grid_size: int = DEFAULT_GRID,
) -> HalfInteger:
    """
    Robbin-Salamon index μ(Λ, V).

    Args:
        path: Lagrangian path Λ(t) = F(t)·seed
        reference: Fixed Lagrangian V
        tol: Base tolerance for crossing decisions
        grid_size: Scan resolution

    Returns:
        ½·sign Γ at endpoint crossings plus sign Γ at interior ones
    """
    return compute_maslov(path, reference, tol, grid_size).value


def compute_maslov_pair(
    first: LagrangianPath,
    second: LagrangianPath,
    tol: float = DEFAULT_TOL,
    grid_size: int = DEFAULT_GRID,
) -> MaslovResult:
    crossings = find_relative_crossings(first, second, tol=tol, grid_size=grid_size)
    return MaslovResult(value=_sum(crossings), crossings=crossings)


def maslov_index_pair(
    first: LagrangianPath,
    second: LagrangianPath,
    tol: float = DEFAULT_TOL,
    grid_size: int = DEFAULT_GRID,
) -> HalfInteger:
    """Index of a pair of Lagrangian paths, using the relative crossing form Γ₁ - Γ₂."""
    return compute_maslov_pair(first, second, tol, grid_size).value
