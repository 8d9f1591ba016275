"""Crossing detection and Robbin-Salamon crossing forms."""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np
import scipy.optimize

from ..errors import CrossingError, ErrorCode
from ..symlin import (
    DEFAULT_TOL,
    LagrangianFrame,
    QuadraticForm,
    intersection_basis,
    lagrangian_complement,
    signature,
)
from .path import LagrangianPath, sample_path


logger = logging.getLogger(__name__)

DEFAULT_GRID = 4096

# Refined candidates closer than this (relative to the duration) are one crossing.
_MERGE = 1e-7


class CrossingKind(str, Enum):
    """Where a crossing sits on the path."""

    START = "start"
    END = "end"
    INTERIOR = "interior"
    JUNCTION = "junction"


@dataclass(frozen=True, eq=False)
class Crossing:
    """
    A time at which the path meets the reference.

    Junction crossings sit on a segment boundary and carry the left and
    right crossing forms; the others carry a single form.
    """

    time: float
    kind: CrossingKind
    intersection_basis: np.ndarray
    forms: Tuple[QuadraticForm, ...]
    signatures: Tuple[int, ...]
    regular: bool

    @property
    def dimension(self) -> int:
        return int(self.intersection_basis.shape[1])

    @property
    def form(self) -> QuadraticForm:
        """The crossing form (the right-hand one at a junction)."""
        return self.forms[-1]

    @property
    def weight_twice(self) -> int:
        """Contribution to twice the index."""
        if self.kind is CrossingKind.INTERIOR:
            return 2 * self.signatures[0]
        return sum(self.signatures)

    @property
    def weight(self) -> float:
        """Contribution to the index as a float."""
        return self.weight_twice / 2.0


class _CrossingProblem:
    """Two Lagrangian paths on a common interval; the second may be constant."""

    def __init__(self, first: LagrangianPath, second: LagrangianPath, tol: float, grid: int):
        first.space.require_same(second.space, "paths")
        if abs(first.duration - second.duration) > first.carrier.snap:
            raise CrossingError(
                ErrorCode.OUT_OF_RANGE,
                f"paths have different durations {first.duration} and {second.duration}",
            )
        self.first = first
        self.second = second
        self.tol = tol
        self.grid = grid
        self.crossing_tol = math.sqrt(tol)
        self.duration = first.duration
        self.snap = first.carrier.snap

    # -- scanning --------------------------------------------------------

    def _normalized_det(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """±∏ sin(principal angles), continuous in t with a continuous sign."""
        stacked = np.concatenate([a, b], axis=-1)
        gram_a = np.linalg.det(np.swapaxes(a, -1, -2) @ a)
        gram_b = np.linalg.det(np.swapaxes(b, -1, -2) @ b)
        return np.linalg.det(stacked) / np.sqrt(gram_a * gram_b)

    def g(self, t: float) -> float:
        return float(self._normalized_det(self.first.columns_at(t), self.second.columns_at(t)))

    def scan(self) -> Tuple[np.ndarray, np.ndarray]:
        cuts = self.breakpoints()
        times, first = sample_path(self.first.carrier, self.grid, cuts)
        frames_first = first @ self.first.seed.columns
        if _is_constant(self.second):
            frames_second = np.broadcast_to(self.second.columns_at(0.0), frames_first.shape)
        else:
            _, second = sample_path(self.second.carrier, self.grid, cuts)
            frames_second = second @ self.second.seed.columns
        values = self._normalized_det(frames_first, frames_second)
        return times, values

    def candidates(self) -> List[float]:
        times, values = self.scan()
        magnitude = np.abs(values)
        hits = magnitude <= self.tol
        found: List[float] = [float(t) for t in times[hits]]

        for i in range(len(times) - 1):
            if hits[i] or hits[i + 1]:
                continue
            if values[i] * values[i + 1] < 0:
                root = scipy.optimize.brentq(self.g, times[i], times[i + 1], xtol=1e-15)
                found.append(float(root))

        threshold = self.crossing_tol
        for i in range(1, len(times) - 1):
            if hits[i] or hits[i - 1] or hits[i + 1] or magnitude[i] >= threshold:
                continue
            if magnitude[i] > magnitude[i - 1] or magnitude[i] > magnitude[i + 1]:
                continue
            if values[i - 1] * values[i] < 0 or values[i] * values[i + 1] < 0:
                continue
            result = scipy.optimize.minimize_scalar(
                lambda t: abs(self.g(t)),
                bounds=(times[i - 1], times[i + 1]),
                method="bounded",
                options={"xatol": 1e-13},
            )
            if abs(self.g(result.x)) <= self.tol:
                found.append(float(result.x))
            else:
                logger.debug(f"Discarding near miss at t={result.x:.6g} (|g|={result.fun:.3e})")
        return self._merge(sorted(found))

    def _merge(self, times: Sequence[float]) -> List[float]:
        merged: List[float] = []
        window = _MERGE * max(1.0, self.duration)
        for t in times:
            if merged and t - merged[-1] <= window:
                continue
            merged.append(t)
        return merged

    # -- classification --------------------------------------------------

    def breakpoints(self) -> np.ndarray:
        cuts = [self.first.carrier.breakpoints]
        if not _is_constant(self.second):
            cuts.append(self.second.carrier.breakpoints)
        return np.unique(np.concatenate(cuts))

    def classify(self, t: float) -> Tuple[float, "CrossingKind"]:
        if t <= self.snap:
            return 0.0, CrossingKind.START
        if t >= self.duration - self.snap:
            return self.duration, CrossingKind.END
        interior = self.breakpoints()[1:-1]
        if interior.size:
            k = int(np.argmin(np.abs(interior - t)))
            if abs(interior[k] - t) <= self.snap:
                return float(interior[k]), CrossingKind.JUNCTION
        return t, CrossingKind.INTERIOR

    def form_on(
        self,
        basis: np.ndarray,
        t: float,
        side: int,
        complement: Optional[LagrangianFrame] = None,
    ) -> QuadraticForm:
        matrix = _path_form(self.first, basis, t, side, complement)
        if not _is_constant(self.second):
            matrix = matrix - _path_form(self.second, basis, t, side, None)
        return QuadraticForm(matrix, basis)

    def crossing_at(self, t: float, strict: bool) -> Optional[Crossing]:
        time, kind = self.classify(t)
        basis = intersection_basis(
            self.first.frame_at(time), self.second.frame_at(time), self.crossing_tol
        )
        if basis.shape[1] == 0:
            logger.debug(f"Candidate at t={time:.6g} has no intersection; skipped")
            return None
        if kind is CrossingKind.START:
            sides: Tuple[int, ...] = (1,)
        elif kind is CrossingKind.END:
            sides = (-1,)
        elif kind is CrossingKind.JUNCTION:
            sides = (-1, 1)
        else:
            sides = (1,)
        forms = tuple(self.form_on(basis, time, side) for side in sides)
        results = [signature(form, tol=self.crossing_tol) for form in forms]
        regular = all(r.nondegenerate for r in results)
        if not regular and strict:
            raise CrossingError(
                ErrorCode.IRREGULAR_CROSSING,
                f"degenerate crossing form at t={time:.9g} (intersection dimension {basis.shape[1]})",
                time=time,
            )
        return Crossing(
            time=time,
            kind=kind,
            intersection_basis=basis,
            forms=forms,
            signatures=tuple(r.signature for r in results),
            regular=regular,
        )

    def crossings(self, strict: bool = True) -> List[Crossing]:
        step = self.duration / self.grid
        result: List[Crossing] = []
        for t in self.candidates():
            crossing = self.crossing_at(t, strict)
            if crossing is None:
                continue
            if result and crossing.time - result[-1].time < step:
                if crossing.time - result[-1].time <= _MERGE * max(1.0, self.duration):
                    continue
                raise CrossingError(
                    ErrorCode.UNRESOLVED,
                    f"crossings at t={result[-1].time:.9g} and t={crossing.time:.9g} "
                    f"are closer than the grid step {step:.3g}",
                    time=crossing.time,
                )
            result.append(crossing)
        logger.debug(f"Found {len(result)} crossing(s) on [0, {self.duration:g}]")
        return result


def _is_constant(path: LagrangianPath) -> bool:
    return all(not np.any(s.generator) for s in path.carrier.segments)


def _path_form(
    path: LagrangianPath,
    basis: np.ndarray,
    t: float,
    side: int,
    complement: Optional[LagrangianFrame],
) -> np.ndarray:
    """
    Crossing form of one moving path on the given basis of Λ(t)∩V.

    Γ(v) = ω(v, w′) where w′ is the W-component of Ω⁻¹S·v in the
    splitting Λ(t) ⊕ W.
    """
    carrier = path.carrier
    hamiltonian = carrier.hamiltonians[carrier.segment_at(t, side)]
    frame = path.frame_at(t)
    if complement is None:
        complement = lagrangian_complement(frame)
    splitting = np.hstack([frame.columns, complement.columns])
    coefficients = np.linalg.solve(splitting, hamiltonian @ basis)
    velocity = complement.columns @ coefficients[frame.space.dim_half:]
    matrix = basis.T @ frame.space.form_matrix @ velocity
    return (matrix + matrix.T) / 2.0


def find_crossings(
    path: LagrangianPath,
    reference: LagrangianFrame,
    tol: float = DEFAULT_TOL,
    grid_size: int = DEFAULT_GRID,
    strict: bool = True,
) -> List[Crossing]:
    """
    Locate every t with Λ(t) ∩ V ≠ 0.

    The normalized determinant det[Λ(t) | V] is scanned on the grid. Sign
    changes are refined with Brent's method and shallow local minima of its
    absolute value (even-dimensional crossings) with bounded minimization.

    Args:
        path: Lagrangian path
        reference: Fixed Lagrangian V
        tol: Base tolerance; intersections are decided at √tol
        grid_size: Number of scan points
        strict: Raise on degenerate crossing forms instead of flagging them

    Returns:
        Crossings ordered by time, endpoints included and marked
    """
    problem = _CrossingProblem(path, LagrangianPath.constant(reference, path.duration), tol, grid_size)
    return problem.crossings(strict)


def find_relative_crossings(
    first: LagrangianPath,
    second: LagrangianPath,
    tol: float = DEFAULT_TOL,
    grid_size: int = DEFAULT_GRID,
    strict: bool = True,
) -> List[Crossing]:
    """Crossings of a pair of paths, with the relative form Γ₁ - Γ₂."""
    return _CrossingProblem(first, second, tol, grid_size).crossings(strict)


def crossing_form(
    path: LagrangianPath,
    reference: LagrangianFrame,
    t0: float,
    complement: Optional[LagrangianFrame] = None,
    side: int = 1,
    tol: float = DEFAULT_TOL,
) -> QuadraticForm:
    """
    Crossing form Γ(Λ, V, t0) on Λ(t0) ∩ V.

    Args:
        path: Lagrangian path
        reference: Fixed Lagrangian V
        t0: Crossing time
        complement: Lagrangian complement W of Λ(t0); defaults to Ω·Λ(t0)
        side: Segment used at a breakpoint (+1 right, -1 left)
        tol: Base tolerance; the intersection is decided at √tol

    Returns:
        Symmetric form expressed on an orthonormal basis of the intersection
    """
    basis = intersection_basis(path.frame_at(t0), reference, math.sqrt(tol))
    if basis.shape[1] == 0:
        raise CrossingError(
            ErrorCode.EMPTY_INTERSECTION, f"Λ({t0}) meets the reference only in 0", time=t0
        )
    return QuadraticForm(_path_form(path, basis, t0, side, complement), basis)
