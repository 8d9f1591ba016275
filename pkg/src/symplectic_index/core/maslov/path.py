"""Piecewise-exponential paths of symplectic matrices and Lagrangian paths."""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Optional, Tuple

import numpy as np
import scipy.linalg

from ..errors import ErrorCode, LinearAlgebraError
from ..symlin import (
    LagrangianFrame,
    SymplecticMatrix,
    SympSpace,
    random_symmetric,
)


logger = logging.getLogger(__name__)

# Times closer than this (relative to the path duration) are identified.
TIME_SNAP = 1e-9


@dataclass(frozen=True, eq=False)
class Segment:
    """One exponential piece: generator S held for ``duration``."""

    generator: np.ndarray
    duration: float

    def __post_init__(self) -> None:
        generator = np.asarray(self.generator, dtype=float)
        if generator.ndim != 2 or generator.shape[0] != generator.shape[1]:
            raise LinearAlgebraError(ErrorCode.DIMENSION_MISMATCH, "generator must be square")
        scale = max(1.0, float(np.max(np.abs(generator))))
        if np.max(np.abs(generator - generator.T)) > 1e-9 * scale:
            raise LinearAlgebraError(ErrorCode.ASYMMETRIC_FORM, "generator is not symmetric")
        if not self.duration > 0:
            raise LinearAlgebraError(
                ErrorCode.OUT_OF_RANGE, f"segment duration must be positive, got {self.duration}"
            )
        generator = (generator + generator.T) / 2.0
        generator.setflags(write=False)
        object.__setattr__(self, "generator", generator)
        object.__setattr__(self, "duration", float(self.duration))


@dataclass(frozen=True, eq=False)
class SymplecticPathSpec:
    """
    F(t) = exp((t - t_k)·Ω⁻¹S_k)·F(t_k) on consecutive segments.

    The start matrix defaults to the identity.
    """

    space: SympSpace
    segments: Tuple[Segment, ...]
    start: Optional[SymplecticMatrix] = field(default=None)

    def __post_init__(self) -> None:
        segments = tuple(self.segments)
        if not segments:
            raise LinearAlgebraError(ErrorCode.OUT_OF_RANGE, "a path needs at least one segment")
        for segment in segments:
            if segment.generator.shape != (self.space.dim, self.space.dim):
                raise LinearAlgebraError(
                    ErrorCode.DIMENSION_MISMATCH,
                    f"generator shape {segment.generator.shape} does not match dimension {self.space.dim}",
                )
        object.__setattr__(self, "segments", segments)
        start = self.start if self.start is not None else SymplecticMatrix.identity(self.space)
        start.space.require_same(self.space, "start matrix and path")
        object.__setattr__(self, "start", start)

    @property
    def start_matrix(self) -> np.ndarray:
        assert self.start is not None
        return self.start.entries

    @cached_property
    def breakpoints(self) -> np.ndarray:
        """Segment boundaries 0 = t₀ < t₁ < … < t_m = T."""
        return np.concatenate([[0.0], np.cumsum([s.duration for s in self.segments])])

    @property
    def duration(self) -> float:
        return float(self.breakpoints[-1])

    @property
    def snap(self) -> float:
        return TIME_SNAP * max(1.0, self.duration)

    @cached_property
    def hamiltonians(self) -> Tuple[np.ndarray, ...]:
        return tuple(self.space.generator_matrix(s.generator) for s in self.segments)

    @cached_property
    def breakpoint_values(self) -> Tuple[np.ndarray, ...]:
        """F(t_k) for every breakpoint."""
        values = [self.start_matrix]
        for segment, hamiltonian in zip(self.segments, self.hamiltonians):
            values.append(scipy.linalg.expm(segment.duration * hamiltonian) @ values[-1])
        return tuple(values)

    @property
    def end_matrix(self) -> np.ndarray:
        return self.breakpoint_values[-1]

    def segment_at(self, t: float, side: int = 1) -> int:
        """Index of the segment active at t, from the right (side=+1) or left (side=-1)."""
        last = len(self.segments) - 1
        if side >= 0:
            index = int(np.searchsorted(self.breakpoints, t + self.snap, side="right")) - 1
        else:
            index = int(np.searchsorted(self.breakpoints, t - self.snap, side="left")) - 1
        return min(max(index, 0), last)


def evaluate_path(spec: SymplecticPathSpec, t: float) -> SymplecticMatrix:
    """
    Evaluate F(t).

    Args:
        spec: Path specification
        t: Time in [0, T]

    Returns:
        The symplectic matrix F(t)
    """
    return SymplecticMatrix(_evaluate(spec, t), spec.space)


def _evaluate(spec: SymplecticPathSpec, t: float) -> np.ndarray:
    if t < -spec.snap or t > spec.duration + spec.snap:
        raise LinearAlgebraError(
            ErrorCode.OUT_OF_RANGE, f"t={t} outside [0, {spec.duration}]"
        )
    t = min(max(t, 0.0), spec.duration)
    k = spec.segment_at(t)
    offset = t - spec.breakpoints[k]
    if offset <= 0.0:
        return spec.breakpoint_values[k]
    return scipy.linalg.expm(offset * spec.hamiltonians[k]) @ spec.breakpoint_values[k]


def sample_path(
    spec: SymplecticPathSpec,
    grid: int,
    cuts: Optional[np.ndarray] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Evaluate the path on a grid containing every breakpoint.

    Points are spread over the pieces between consecutive cuts in
    proportion to their lengths (at least 8 per piece). One exponential
    per piece is computed and applied repeatedly, restarting from the
    exact value at every cut.

    Args:
        spec: Path specification
        grid: Approximate number of points
        cuts: Extra times to include (sorted, containing 0 and T); the
            path's own breakpoints are always included

    Returns:
        (times, matrices) with matrices of shape (N, 2n, 2n)
    """
    boundaries = spec.breakpoints if cuts is None else np.union1d(cuts, spec.breakpoints)
    total = spec.duration
    times: List[np.ndarray] = []
    values: List[np.ndarray] = []
    for lo, hi in zip(boundaries[:-1], boundaries[1:]):
        length = hi - lo
        if length <= spec.snap:
            continue
        steps = max(8, int(round(grid * length / total)))
        k = spec.segment_at(0.5 * (lo + hi))
        step = scipy.linalg.expm((length / steps) * spec.hamiltonians[k])
        current = _evaluate(spec, lo)
        block = [current]
        for _ in range(steps - 1):
            current = step @ current
            block.append(current)
        block.append(_evaluate(spec, hi))
        local = lo + np.linspace(0.0, length, steps + 1)
        if times:
            local = local[1:]
            block = block[1:]
        times.append(local)
        values.append(np.stack(block))
    return np.concatenate(times), np.concatenate(values)


@dataclass(frozen=True, eq=False)
class LagrangianPath:
    """Λ(t) = F(t)·seed."""

    carrier: SymplecticPathSpec
    seed: LagrangianFrame

    def __post_init__(self) -> None:
        self.seed.space.require_same(self.carrier.space, "seed frame and carrier path")

    @property
    def space(self) -> SympSpace:
        return self.carrier.space

    @property
    def duration(self) -> float:
        return self.carrier.duration

    def frame_at(self, t: float) -> LagrangianFrame:
        return LagrangianFrame(_evaluate(self.carrier, t) @ self.seed.columns, self.space)

    def columns_at(self, t: float) -> np.ndarray:
        return _evaluate(self.carrier, t) @ self.seed.columns

    @classmethod
    def constant(cls, frame: LagrangianFrame, duration: float = 1.0) -> "LagrangianPath":
        """The constant path at ``frame``."""
        zero = Segment(np.zeros((frame.space.dim, frame.space.dim)), duration)
        return cls(SymplecticPathSpec(frame.space, (zero,)), frame)


# --- path algebra -----------------------------------------------------------


def concatenate(first: SymplecticPathSpec, second: SymplecticPathSpec) -> SymplecticPathSpec:
    """Run ``first`` then ``second``; the second must start where the first ends."""
    first.space.require_same(second.space, "paths")
    scale = max(1.0, float(np.max(np.abs(first.end_matrix))))
    if np.max(np.abs(first.end_matrix - second.start_matrix)) > 1e-8 * scale:
        raise LinearAlgebraError(
            ErrorCode.OUT_OF_RANGE, "second path does not start at the end of the first"
        )
    return SymplecticPathSpec(first.space, first.segments + second.segments, first.start)


def restrict(spec: SymplecticPathSpec, begin: float, end: float) -> SymplecticPathSpec:
    """The portion of the path on [begin, end], reparametrized to start at 0."""
    if not (-spec.snap <= begin < end <= spec.duration + spec.snap):
        raise LinearAlgebraError(
            ErrorCode.OUT_OF_RANGE, f"[{begin}, {end}] is not inside [0, {spec.duration}]"
        )
    pieces = []
    for k, segment in enumerate(spec.segments):
        lo = max(begin, spec.breakpoints[k])
        hi = min(end, spec.breakpoints[k + 1])
        if hi - lo > spec.snap:
            pieces.append(Segment(segment.generator, hi - lo))
    return SymplecticPathSpec(spec.space, tuple(pieces), evaluate_path(spec, begin))


def reverse(spec: SymplecticPathSpec) -> SymplecticPathSpec:
    """t ↦ F(T - t): generators negated, order reversed, starting at F(T)."""
    segments = tuple(Segment(-s.generator, s.duration) for s in reversed(spec.segments))
    return SymplecticPathSpec(spec.space, segments, SymplecticMatrix(spec.end_matrix, spec.space))


def rescale(spec: SymplecticPathSpec, factor: float) -> SymplecticPathSpec:
    """Same image, durations stretched by ``factor`` and generators divided by it."""
    if not factor > 0:
        raise LinearAlgebraError(ErrorCode.OUT_OF_RANGE, f"scale factor must be positive, got {factor}")
    segments = tuple(Segment(s.generator / factor, s.duration * factor) for s in spec.segments)
    return SymplecticPathSpec(spec.space, segments, spec.start)


def right_multiply(spec: SymplecticPathSpec, matrix: np.ndarray) -> SymplecticPathSpec:
    """t ↦ F(t)·M for a constant symplectic M; generators unchanged."""
    start = SymplecticMatrix(spec.start_matrix @ np.asarray(matrix, dtype=float), spec.space)
    return SymplecticPathSpec(spec.space, spec.segments, start)


def conjugate_path(spec: SymplecticPathSpec, matrix: np.ndarray) -> SymplecticPathSpec:
    """
    t ↦ G·F(t)·G⁻¹ for G symplectic or anti-symplectic.

    The generator transforms as S ↦ Ω·G·Ω⁻¹·S·G⁻¹, which is symmetric in
    both cases.
    """
    g = np.asarray(matrix, dtype=float)
    g_inv = np.linalg.inv(g)
    omega = spec.space.form_matrix
    lift = omega @ g @ spec.space.form_inverse
    segments = tuple(Segment(lift @ s.generator @ g_inv, s.duration) for s in spec.segments)
    start = SymplecticMatrix(g @ spec.start_matrix @ g_inv, spec.space)
    return SymplecticPathSpec(spec.space, segments, start)


def left_multiply(spec: SymplecticPathSpec, matrix: np.ndarray) -> SymplecticPathSpec:
    """t ↦ G·F(t) for a constant symplectic G."""
    return right_multiply(conjugate_path(spec, matrix), matrix)


def direct_sum(first: SymplecticPathSpec, second: SymplecticPathSpec) -> SymplecticPathSpec:
    """Block path diag(F₁(t), F₂(t)) on the direct sum; breakpoints are merged."""
    if abs(first.duration - second.duration) > first.snap:
        raise LinearAlgebraError(
            ErrorCode.OUT_OF_RANGE,
            f"durations differ: {first.duration} vs {second.duration}",
        )
    cuts = np.union1d(first.breakpoints, second.breakpoints)
    merged: List[float] = [float(cuts[0])]
    for cut in cuts[1:]:
        if cut - merged[-1] > first.snap:
            merged.append(float(cut))
    merged[-1] = first.duration

    segments = []
    for lo, hi in zip(merged[:-1], merged[1:]):
        middle = 0.5 * (lo + hi)
        a = first.segments[first.segment_at(middle)].generator
        b = second.segments[second.segment_at(middle)].generator
        segments.append(Segment(scipy.linalg.block_diag(a, b), hi - lo))
    start = SymplecticMatrix(
        scipy.linalg.block_diag(first.start_matrix, second.start_matrix),
        first.space.direct_sum(second.space),
    )
    return SymplecticPathSpec(start.space, tuple(segments), start)


def perturb(spec: SymplecticPathSpec, eps: float, generator: np.ndarray) -> SymplecticPathSpec:
    """
    Prepend a short segment (generator, eps) and rescale to the original duration.

    Past the new segment the path is F(t)·exp(eps·Ω⁻¹S₀); F(0) is unchanged.
    """
    segments = (Segment(generator, eps),) + spec.segments
    widened = SymplecticPathSpec(spec.space, segments, spec.start)
    return rescale(widened, spec.duration / widened.duration)


def extend_to(spec: SymplecticPathSpec, duration: float) -> SymplecticPathSpec:
    """Stretch (or shorten) the final segment so the path ends at ``duration``."""
    last = spec.segments[-1]
    new_last = last.duration + (duration - spec.duration)
    if new_last <= 0:
        raise LinearAlgebraError(
            ErrorCode.OUT_OF_RANGE,
            f"cannot end at {duration}: the final segment would vanish",
        )
    segments = spec.segments[:-1] + (Segment(last.generator, new_last),)
    return SymplecticPathSpec(spec.space, segments, spec.start)


def random_path(
    space: SympSpace,
    rng: np.random.Generator,
    segments: Tuple[int, int] = (1, 4),
    scale: float = 1.5,
    durations: Tuple[float, float] = (0.2, 1.0),
    total: Optional[float] = None,
) -> SymplecticPathSpec:
    """
    Random piecewise-exponential path starting at the identity.

    Args:
        space: Ambient space
        rng: Seeded generator
        segments: Inclusive range for the number of segments
        scale: Generator entries are uniform in [-scale, scale]
        durations: Range of each segment duration
        total: If given, the path is reparametrized to this duration
    """
    count = int(rng.integers(segments[0], segments[1] + 1))
    pieces = tuple(
        Segment(random_symmetric(space.dim, rng, scale), float(rng.uniform(*durations)))
        for _ in range(count)
    )
    spec = SymplecticPathSpec(space, pieces)
    if total is not None:
        spec = rescale(spec, total / spec.duration)
    return spec


def generic_generator(space: SympSpace) -> np.ndarray:
    """A fixed, generic symmetric generator for a space (deterministic)."""
    rng = np.random.default_rng([0x5EED, space.dim])
    return random_symmetric(space.dim, rng, 1.0)

