"""Hörmander index of four Lagrangians."""

import logging
import math
from typing import Optional, Tuple

import numpy as np

from ...models.report import HormanderReport
from ..errors import CrossingError, ErrorCode, LinearAlgebraError
from ..maslov import (
    DEFAULT_GRID,
    HalfInteger,
    LagrangianPath,
    Segment,
    SymplecticPathSpec,
    conjugate_path,
    maslov_index,
)
from ..symlin import (
    DEFAULT_TOL,
    LagrangianFrame,
    QuadraticForm,
    SympSpace,
    horizontal,
    intersection_dimension,
    random_symmetric,
    random_symplectic,
    signature,
    transversality,
    vertical,
)


logger = logging.getLogger(__name__)

DEFAULT_ATTEMPTS = 32

# Minimum product of principal-angle sines between the chart's vertical and the inputs.
CHART_MARGIN = 1e-3

# Pairwise transversality required by the signature formula.
TRANSVERSE_MARGIN = 1e-6


class _Chart:
    """
    Coordinates u = G⁻¹x in which an auxiliary Lagrangian T = G·iℝⁿ is vertical.

    Lagrangians transverse to T are graphs {(x, Px)} over the horizontal
    coordinates; the shear (x, y) ↦ (x, y + tKx) moves one graph to another
    without ever meeting T.
    """

    def __init__(self, space: SympSpace, transform: np.ndarray):
        self.space = space
        self.transform = transform
        self.inverse = np.linalg.inv(transform)
        self.horizontal = horizontal(space).columns
        self.vertical = vertical(space).columns
        # signs of the coordinate blocks; the identity on a standard space
        self.signs = self.horizontal.T @ space.form_matrix @ self.vertical

    def slope(self, frame: LagrangianFrame) -> np.ndarray:
        local = self.inverse @ frame.columns
        base = self.horizontal.T @ local
        return (self.vertical.T @ local) @ np.linalg.inv(base)

    def shear(self, increment: np.ndarray) -> np.ndarray:
        """Symmetric generator of the unit-time shear adding ``increment`` to the slope."""
        nilpotent = self.vertical @ increment @ self.horizontal.T
        generator = self.space.form_matrix @ nilpotent
        return (generator + generator.T) / 2.0


def _draw_chart(
    space: SympSpace,
    frames: Tuple[LagrangianFrame, ...],
    rng: np.random.Generator,
) -> Optional[_Chart]:
    transform = random_symplectic(space, rng).entries
    auxiliary = vertical(space).pushed(transform)
    if min(transversality(auxiliary, f) for f in frames) <= CHART_MARGIN:
        return None
    return _Chart(space, transform)


def shear_path(
    start: LagrangianFrame,
    end: LagrangianFrame,
    chart: _Chart,
    rng: np.random.Generator,
) -> LagrangianPath:
    """Two shear segments start → E → end through a random waypoint E, all transverse to T."""
    space = start.space
    n = space.dim_half
    slope_start = chart.slope(start)
    slope_end = chart.slope(end)
    slope_mid = slope_start + chart.signs @ random_symmetric(n, rng, 1.0)

    local = SymplecticPathSpec(
        space,
        (
            Segment(chart.shear(slope_mid - slope_start), 1.0),
            Segment(chart.shear(slope_end - slope_mid), 1.0),
        ),
    )
    return LagrangianPath(conjugate_path(local, chart.transform), start)


def compute_hormander(
    a: LagrangianFrame,
    b: LagrangianFrame,
    c: LagrangianFrame,
    d: LagrangianFrame,
    rng: Optional[np.random.Generator] = None,
    tol: float = DEFAULT_TOL,
    grid: int = DEFAULT_GRID,
    attempts: int = DEFAULT_ATTEMPTS,
) -> HormanderReport:
    """
    Hörmander index s(A, B; C, D) = μ(Λ, B) - μ(Λ, A) along a path Λ from C to D.

    Each attempt draws a new chart and waypoint; charts too close to an
    input and paths with irregular crossings are discarded.

    Raises:
        LinearAlgebraError: TRANSVERSALITY when every attempt was discarded
    """
    space = a.space
    for other in (b, c, d):
        space.require_same(other.space, "Lagrangians")
    if rng is None:
        rng = np.random.default_rng(0x4011)

    if intersection_dimension(c, d, math.sqrt(tol)) == space.dim_half:
        return HormanderReport(value_twice=0, attempts=1)

    for attempt in range(1, attempts + 1):
        chart = _draw_chart(space, (a, b, c, d), rng)
        if chart is None:
            logger.debug(f"Attempt {attempt}: auxiliary Lagrangian too close to an input")
            continue
        path = shear_path(c, d, chart, rng)
        try:
            value = maslov_index(path, b, tol, grid) - maslov_index(path, a, tol, grid)
        except CrossingError as e:
            logger.debug(f"Attempt {attempt}: {e}")
            continue
        return HormanderReport(value_twice=value.twice, attempts=attempt)

    raise LinearAlgebraError(
        ErrorCode.TRANSVERSALITY, f"no usable auxiliary Lagrangian in {attempts} attempts"
    )


def hormander(
    a: LagrangianFrame,
    b: LagrangianFrame,
    c: LagrangianFrame,
    d: LagrangianFrame,
    rng: Optional[np.random.Generator] = None,
    tol: float = DEFAULT_TOL,
    grid: int = DEFAULT_GRID,
    attempts: int = DEFAULT_ATTEMPTS,
) -> HalfInteger:
    return compute_hormander(a, b, c, d, rng, tol, grid, attempts).value


def hormander_signature(
    first: LagrangianFrame,
    second: LagrangianFrame,
    third: LagrangianFrame,
    tol: float = DEFAULT_TOL,
) -> HalfInteger:
    """
    ½·sign Q′ for pairwise transverse L, K, L′.

    L′ is the graph of f: K → L; Q′(v) = ω(v, f(v)) on K.

    Args:
        first: L
        second: K
        third: L′
        tol: Eigenvalue tolerance for the signature

    Returns:
        ½·sign Q′, equal to s(L, K; K, L′)
    """
    frames = (first, second, third)
    for i in range(3):
        for j in range(i + 1, 3):
            if transversality(frames[i], frames[j]) <= TRANSVERSE_MARGIN:
                raise LinearAlgebraError(
                    ErrorCode.TRANSVERSALITY, "signature formula needs pairwise transverse Lagrangians"
                )
    n = first.space.dim_half
    coefficients = np.linalg.solve(np.hstack([first.columns, second.columns]), third.columns)
    along_first = first.columns @ coefficients[:n]
    along_second = second.columns @ coefficients[n:]
    raw = along_second.T @ first.space.form_matrix @ along_first
    form = QuadraticForm((raw + raw.T) / 2.0)
    return HalfInteger(signature(form, tol).signature)
