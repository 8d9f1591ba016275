"""Value types for symplectic linear algebra.

All types are immutable: arrays are copied on construction and marked
read-only, so instances can be shared freely between threads.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence, Tuple

import numpy as np
import scipy.linalg

from ..errors import ErrorCode, LinearAlgebraError


logger = logging.getLogger(__name__)

# Relative tolerance used when validating constructed values.
STRUCTURE_TOL = 1e-8


def _frozen(array: np.ndarray) -> np.ndarray:
    result = np.array(array, dtype=float, copy=True)
    result.setflags(write=False)
    return result


def standard_form(n: int) -> np.ndarray:
    """Matrix of ω₀ on ℝ²ⁿ in coordinates (x₁..xₙ, y₁..yₙ).

    ω₀(u, v) = uᵀ Ω v with Ω = [[0, I], [-I, 0]], so that ω₀(e₁, i·e₁) = 1
    where i acts as Ω⁻¹ = [[0, -I], [I, 0]].
    """
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return np.block([[zero, eye], [-eye, zero]])


@dataclass(frozen=True, eq=False)
class SympSpace:
    """A real symplectic vector space (ℝ²ⁿ, Ω).

    Spaces built by :meth:`direct_sum` keep track of their blocks so that
    the coordinate Lagrangians ℝⁿ and iℝⁿ and the involutions c_z and c′
    can be assembled block by block.
    """

    dim_half: int
    form_matrix: np.ndarray = field(default=None)  # type: ignore[assignment]
    block_signs: Tuple[int, ...] = (1,)
    blocks: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.dim_half < 1:
            raise LinearAlgebraError(
                ErrorCode.DIMENSION_MISMATCH, f"dim_half must be positive, got {self.dim_half}"
            )
        blocks = self.blocks or (self.dim_half,)
        if sum(blocks) != self.dim_half or len(blocks) != len(self.block_signs):
            raise LinearAlgebraError(
                ErrorCode.DIMENSION_MISMATCH,
                f"blocks {blocks} with signs {self.block_signs} do not add up to n={self.dim_half}",
            )
        object.__setattr__(self, "blocks", tuple(blocks))

        if self.form_matrix is None:
            form = scipy.linalg.block_diag(
                *(sign * standard_form(k) for k, sign in zip(blocks, self.block_signs))
            )
        else:
            form = np.asarray(self.form_matrix, dtype=float)

        dim = 2 * self.dim_half
        if form.shape != (dim, dim):
            raise LinearAlgebraError(
                ErrorCode.DIMENSION_MISMATCH,
                f"form matrix has shape {form.shape}, expected {(dim, dim)}",
            )
        if np.max(np.abs(form + form.T)) > STRUCTURE_TOL:
            raise LinearAlgebraError(ErrorCode.NOT_SYMPLECTIC, "form matrix is not antisymmetric")
        if abs(np.linalg.det(form)) < STRUCTURE_TOL:
            raise LinearAlgebraError(ErrorCode.NOT_SYMPLECTIC, "form matrix is degenerate")
        object.__setattr__(self, "form_matrix", _frozen(form))

    @classmethod
    def standard(cls, n: int) -> "SympSpace":
        """(ℝ²ⁿ, ω₀)."""
        return cls(dim_half=n)

    @property
    def dim(self) -> int:
        return 2 * self.dim_half

    @cached_property
    def form_inverse(self) -> np.ndarray:
        return _frozen(np.linalg.inv(self.form_matrix))

    @property
    def is_blockwise_standard(self) -> bool:
        expected = scipy.linalg.block_diag(
            *(sign * standard_form(k) for k, sign in zip(self.blocks, self.block_signs))
        )
        return bool(np.allclose(self.form_matrix, expected, atol=STRUCTURE_TOL))

    def omega(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Evaluate the form; works column-wise on matrices."""
        return np.asarray(u).T @ self.form_matrix @ np.asarray(v)

    def generator_matrix(self, symmetric: np.ndarray) -> np.ndarray:
        """Hamiltonian matrix Ω⁻¹·S of a symmetric generator S."""
        return self.form_inverse @ np.asarray(symmetric, dtype=float)

    def negated(self) -> "SympSpace":
        """The same vector space with the form -Ω."""
        return SympSpace(
            dim_half=self.dim_half,
            form_matrix=-self.form_matrix,
            block_signs=tuple(-s for s in self.block_signs),
            blocks=self.blocks,
        )

    def direct_sum(self, *others: "SympSpace") -> "SympSpace":
        """Block-diagonal direct sum, blocks and signs concatenated."""
        spaces = (self,) + others
        return SympSpace(
            dim_half=sum(s.dim_half for s in spaces),
            form_matrix=scipy.linalg.block_diag(*(s.form_matrix for s in spaces)),
            block_signs=tuple(sign for s in spaces for sign in s.block_signs),
            blocks=tuple(k for s in spaces for k in s.blocks),
        )

    def doubled(self) -> "SympSpace":
        """(V ⊕ V, Ω ⊕ -Ω), the home of graphs and of the diagonal △."""
        return self.direct_sum(self.negated())

    def same_as(self, other: "SympSpace") -> bool:
        return self.dim == other.dim and bool(
            np.allclose(self.form_matrix, other.form_matrix, atol=STRUCTURE_TOL)
        )

    def require_same(self, other: "SympSpace", what: str = "operands") -> None:
        if not self.same_as(other):
            raise LinearAlgebraError(
                ErrorCode.DIMENSION_MISMATCH, f"{what} live in different symplectic spaces"
            )

    def block_offsets(self) -> Sequence[Tuple[int, int]]:
        """(offset, half-dimension) of every block in coordinate order."""
        offsets = []
        offset = 0
        for k in self.blocks:
            offsets.append((offset, k))
            offset += 2 * k
        return offsets


def _check_shape(entries: np.ndarray, space: SympSpace, columns: Optional[int] = None) -> None:
    expected = (space.dim, space.dim if columns is None else columns)
    if entries.shape != expected:
        raise LinearAlgebraError(
            ErrorCode.DIMENSION_MISMATCH, f"shape {entries.shape} does not match expected {expected}"
        )


def symplectic_defect(entries: np.ndarray, space: SympSpace, sign: int = 1) -> float:
    """‖MᵀΩM - sign·Ω‖∞."""
    residual = entries.T @ space.form_matrix @ entries - sign * space.form_matrix
    return float(np.max(np.abs(residual)))


@dataclass(frozen=True, eq=False)
class SymplecticMatrix:
    """A matrix M with MᵀΩM = Ω."""

    entries: np.ndarray
    space: SympSpace

    def __post_init__(self) -> None:
        entries = np.asarray(self.entries, dtype=float)
        _check_shape(entries, self.space)
        scale = max(1.0, float(np.max(np.abs(entries))) ** 2)
        if symplectic_defect(entries, self.space) > STRUCTURE_TOL * scale:
            raise LinearAlgebraError(ErrorCode.NOT_SYMPLECTIC, "matrix does not preserve the form")
        object.__setattr__(self, "entries", _frozen(entries))

    @classmethod
    def identity(cls, space: SympSpace) -> "SymplecticMatrix":
        return cls(np.eye(space.dim), space)

    def inverse(self) -> "SymplecticMatrix":
        # M⁻¹ = Ω⁻¹ Mᵀ Ω
        return SymplecticMatrix(
            self.space.form_inverse @ self.entries.T @ self.space.form_matrix, self.space
        )

    def __matmul__(self, other: "SymplecticMatrix") -> "SymplecticMatrix":
        self.space.require_same(other.space)
        return SymplecticMatrix(self.entries @ other.entries, self.space)


@dataclass(frozen=True, eq=False)
class AntiSymplecticMap:
    """An anti-symplectic involution: MᵀΩM = -Ω and M² = 1."""

    entries: np.ndarray
    space: SympSpace

    def __post_init__(self) -> None:
        entries = np.asarray(self.entries, dtype=float)
        _check_shape(entries, self.space)
        if np.max(np.abs(entries @ entries - np.eye(self.space.dim))) > STRUCTURE_TOL:
            raise LinearAlgebraError(ErrorCode.NOT_INVOLUTION, "map does not square to the identity")
        if symplectic_defect(entries, self.space, sign=-1) > STRUCTURE_TOL:
            raise LinearAlgebraError(ErrorCode.NOT_ANTI_SYMPLECTIC, "map does not reverse the form")
        object.__setattr__(self, "entries", _frozen(entries))


def complex_conjugation(space: SympSpace) -> AntiSymplecticMap:
    """c_z: (x, y) ↦ (x, -y) on every block; fixes ℝⁿ."""
    diag = []
    for _, k in space.block_offsets():
        diag.extend([1.0] * k + [-1.0] * k)
    return AntiSymplecticMap(np.diag(diag), space)


def swap_involution(space: SympSpace) -> AntiSymplecticMap:
    """c′(x, y) = (y, x) on a doubled space V ⊕ V̄; fixes △."""
    if space.dim % 4 != 0:
        raise LinearAlgebraError(
            ErrorCode.DIMENSION_MISMATCH, "swap involution needs a doubled space"
        )
    half = space.dim // 2
    eye = np.eye(half)
    zero = np.zeros((half, half))
    return AntiSymplecticMap(np.block([[zero, eye], [eye, zero]]), space)


@dataclass(frozen=True, eq=False)
class LagrangianFrame:
    """A Lagrangian subspace given by a 2n×n spanning frame.

    Frames are never normalized; everything downstream depends only on
    the column span.
    """

    columns: np.ndarray
    space: SympSpace

    def __post_init__(self) -> None:
        columns = np.asarray(self.columns, dtype=float)
        _check_shape(columns, self.space, columns=self.space.dim_half)
        singular = np.linalg.svd(columns, compute_uv=False)
        if singular[-1] <= STRUCTURE_TOL * max(1.0, singular[0]):
            raise LinearAlgebraError(ErrorCode.NOT_LAGRANGIAN, "frame does not have full rank")
        isotropy = np.max(np.abs(columns.T @ self.space.form_matrix @ columns))
        if isotropy > STRUCTURE_TOL * max(1.0, singular[0] ** 2):
            raise LinearAlgebraError(
                ErrorCode.NOT_LAGRANGIAN, f"frame is not isotropic (residual {isotropy:.3e})"
            )
        object.__setattr__(self, "columns", _frozen(columns))

    @cached_property
    def orthonormal(self) -> np.ndarray:
        return _frozen(scipy.linalg.orth(self.columns))

    def pushed(self, matrix: np.ndarray) -> "LagrangianFrame":
        """Image under a symplectic (or anti-symplectic) matrix."""
        return LagrangianFrame(np.asarray(matrix) @ self.columns, self.space)


def horizontal(space: SympSpace) -> LagrangianFrame:
    """ℝⁿ: the span of the x-coordinates of every block."""
    return LagrangianFrame(_coordinate_frame(space, upper=True), space)


def vertical(space: SympSpace) -> LagrangianFrame:
    """iℝⁿ: the span of the y-coordinates of every block."""
    return LagrangianFrame(_coordinate_frame(space, upper=False), space)


def diagonal(space: SympSpace) -> LagrangianFrame:
    """△ = {(x, x)} in a doubled space."""
    if space.dim % 4 != 0:
        raise LinearAlgebraError(ErrorCode.DIMENSION_MISMATCH, "diagonal needs a doubled space")
    half = space.dim // 2
    return LagrangianFrame(np.vstack([np.eye(half), np.eye(half)]), space)


def _coordinate_frame(space: SympSpace, upper: bool) -> np.ndarray:
    frame = np.zeros((space.dim, space.dim_half))
    column = 0
    for offset, k in space.block_offsets():
        start = offset if upper else offset + k
        for j in range(k):
            frame[start + j, column] = 1.0
            column += 1
    return frame


@dataclass(frozen=True, eq=False)
class QuadraticForm:
    """Symmetric bilinear form expressed on a basis (columns of ``basis``)."""

    matrix: np.ndarray
    basis: Optional[np.ndarray] = None

    def __post_init__(self) -> None:
        matrix = np.atleast_2d(np.asarray(self.matrix, dtype=float))
        if matrix.shape[0] != matrix.shape[1]:
            raise LinearAlgebraError(ErrorCode.DIMENSION_MISMATCH, "form matrix must be square")
        scale = max(1.0, float(np.max(np.abs(matrix))) if matrix.size else 1.0)
        if matrix.size and np.max(np.abs(matrix - matrix.T)) > STRUCTURE_TOL * scale:
            raise LinearAlgebraError(ErrorCode.ASYMMETRIC_FORM, "quadratic form is not symmetric")
        object.__setattr__(self, "matrix", _frozen((matrix + matrix.T) / 2.0))
        if self.basis is not None:
            object.__setattr__(self, "basis", _frozen(self.basis))

    @property
    def rank(self) -> int:
        return int(self.matrix.shape[0])

    def congruent(self, transform: np.ndarray) -> "QuadraticForm":
        """PᵀQP."""
        p = np.asarray(transform, dtype=float)
        return QuadraticForm(p.T @ self.matrix @ p)


@dataclass(frozen=True)
class SignatureResult:
    """Inertia of a quadratic form at a given tolerance."""

    positive: int
    negative: int
    degenerate: int

    @property
    def signature(self) -> int:
        return self.positive - self.negative

    @property
    def nondegenerate(self) -> bool:
        return self.degenerate == 0
