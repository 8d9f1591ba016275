"""Input file models: path specifications and Hörmander quadruples."""

from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..core.maslov import Segment, SymplecticPathSpec
from ..core.symlin import LagrangianFrame, SymplecticMatrix, SympSpace, horizontal
from .report import IndexFlavor


Matrix = List[List[float]]


def _rectangular(rows: Matrix, name: str) -> Matrix:
    if not rows or any(len(row) != len(rows[0]) for row in rows):
        raise ValueError(f"{name} must be a non-empty rectangular matrix")
    return rows


class SegmentSpec(BaseModel):
    """One segment: symmetric generator S (row-major) held for duration d."""

    model_config = ConfigDict(populate_by_name=True, extra="forbid")

    S: Matrix = Field(..., description="Symmetric 2n×2n generator")
    d: float = Field(..., gt=0.0, description="Duration")

    @field_validator("S")
    @classmethod
    def validate_symmetric(cls, v: Matrix) -> Matrix:
        rows = _rectangular(v, "S")
        matrix = np.asarray(rows, dtype=float)
        if matrix.shape[0] != matrix.shape[1]:
            raise ValueError(f"S must be square, got {matrix.shape[0]}×{matrix.shape[1]}")
        scale = max(1.0, float(np.max(np.abs(matrix))))
        if np.max(np.abs(matrix - matrix.T)) > 1e-9 * scale:
            raise ValueError("S must be symmetric")
        return rows


class PathSpecFile(BaseModel):
    """JSON path specification read by ``index``, ``double`` and ``diagonal``."""

    model_config = ConfigDict(extra="forbid")

    n: int = Field(..., ge=1, le=8, description="Half-dimension")
    segments: List[SegmentSpec] = Field(..., min_length=1, description="Segments in time order")
    start: Optional[Matrix] = Field(None, description="Symplectic start matrix (default identity)")
    seed_frame: Optional[Matrix] = Field(None, description="2n×n Lagrangian frame pushed along the path")
    flavor: Optional[IndexFlavor] = Field(None, description="Index flavor")

    @model_validator(mode="after")
    def _check_dimensions(self) -> "PathSpecFile":
        dim = 2 * self.n
        for i, segment in enumerate(self.segments):
            if len(segment.S) != dim:
                raise ValueError(f"segments.{i}.S must be {dim}×{dim} for n={self.n}")
        if self.start is not None:
            start = np.asarray(_rectangular(self.start, "start"), dtype=float)
            if start.shape != (dim, dim):
                raise ValueError(f"start must be {dim}×{dim}")
        if self.seed_frame is not None:
            frame = np.asarray(_rectangular(self.seed_frame, "seed_frame"), dtype=float)
            if frame.shape != (dim, self.n):
                raise ValueError(f"seed_frame must be {dim}×{self.n}")
        return self

    @property
    def space(self) -> SympSpace:
        return SympSpace.standard(self.n)

    def to_spec(self) -> SymplecticPathSpec:
        space = self.space
        start = None
        if self.start is not None:
            start = SymplecticMatrix(np.asarray(self.start, dtype=float), space)
        segments = tuple(Segment(np.asarray(s.S, dtype=float), s.d) for s in self.segments)
        return SymplecticPathSpec(space, segments, start)

    def to_seed_frame(self) -> LagrangianFrame:
        if self.seed_frame is None:
            return horizontal(self.space)
        return LagrangianFrame(np.asarray(self.seed_frame, dtype=float), self.space)


class HormanderFile(BaseModel):
    """Lagrangian frames for ``hormander``: a quadruple A, B, C, D or a triple L, K, Lp."""

    model_config = ConfigDict(extra="forbid")

    n: int = Field(..., ge=1, le=8, description="Half-dimension")
    A: Optional[Matrix] = None
    B: Optional[Matrix] = None
    C: Optional[Matrix] = None
    D: Optional[Matrix] = None
    L: Optional[Matrix] = None
    K: Optional[Matrix] = None
    Lp: Optional[Matrix] = None

    @model_validator(mode="after")
    def _check_shape(self) -> "HormanderFile":
        quadruple = [self.A, self.B, self.C, self.D]
        triple = [self.L, self.K, self.Lp]
        if all(f is not None for f in quadruple) and all(f is None for f in triple):
            frames = dict(zip("ABCD", quadruple))
        elif all(f is not None for f in triple) and all(f is None for f in quadruple):
            frames = dict(zip(("L", "K", "Lp"), triple))
        else:
            raise ValueError("give either all of A, B, C, D or all of L, K, Lp")
        for name, rows in frames.items():
            frame = np.asarray(_rectangular(rows, name), dtype=float)  # type: ignore[arg-type]
            if frame.shape != (2 * self.n, self.n):
                raise ValueError(f"{name} must be {2 * self.n}×{self.n}")
        return self

    @property
    def is_triple(self) -> bool:
        return self.L is not None

    def frames(self) -> List[LagrangianFrame]:
        space = SympSpace.standard(self.n)
        rows = [self.L, self.K, self.Lp] if self.is_triple else [self.A, self.B, self.C, self.D]
        return [LagrangianFrame(np.asarray(r, dtype=float), space) for r in rows]
