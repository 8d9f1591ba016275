"""Operations on symplectic matrices, Lagrangian frames and quadratic forms."""

import logging
from typing import Optional, Union

import numpy as np
import scipy.linalg

from ..errors import ErrorCode, LinearAlgebraError
from .space import (
    AntiSymplecticMap,
    LagrangianFrame,
    QuadraticForm,
    SignatureResult,
    SymplecticMatrix,
    SympSpace,
    horizontal,
)


logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-9

MatrixLike = Union[SymplecticMatrix, np.ndarray]


def is_symplectic(
    matrix: MatrixLike,
    space: Optional[SympSpace] = None,
    tol: float = DEFAULT_TOL,
) -> bool:
    """
    Check whether a matrix preserves the symplectic form.

    Args:
        matrix: Candidate matrix (a bare array is accepted)
        space: Ambient space; defaults to the standard space of matching size
        tol: Bound on ‖MᵀΩM - Ω‖∞

    Returns:
        True when the residual is within tolerance
    """
    entries = matrix.entries if isinstance(matrix, SymplecticMatrix) else np.asarray(matrix, float)
    if entries.ndim != 2 or entries.shape[0] != entries.shape[1] or entries.shape[0] % 2:
        raise LinearAlgebraError(
            ErrorCode.DIMENSION_MISMATCH, f"expected a square even-dimensional matrix, got {entries.shape}"
        )
    if space is None:
        space = matrix.space if isinstance(matrix, SymplecticMatrix) else SympSpace.standard(entries.shape[0] // 2)
    if entries.shape[0] != space.dim:
        raise LinearAlgebraError(
            ErrorCode.DIMENSION_MISMATCH,
            f"matrix of size {entries.shape[0]} does not act on a space of dimension {space.dim}",
        )
    residual = entries.T @ space.form_matrix @ entries - space.form_matrix
    return bool(np.max(np.abs(residual)) <= tol)


def as_symplectic(matrix: MatrixLike, space: Optional[SympSpace] = None) -> SymplecticMatrix:
    """Wrap an array as a :class:`SymplecticMatrix`, validating it."""
    if isinstance(matrix, SymplecticMatrix):
        return matrix
    entries = np.asarray(matrix, dtype=float)
    if space is None:
        space = SympSpace.standard(entries.shape[0] // 2)
    return SymplecticMatrix(entries, space)


def graph_lagrangian(matrix: MatrixLike) -> LagrangianFrame:
    """
    Graph {(Fz, z)} of a symplectic map, a Lagrangian in (V ⊕ V, Ω ⊕ -Ω).

    Args:
        matrix: Symplectic matrix F

    Returns:
        Frame whose columns are (F eⱼ, eⱼ)
    """
    symplectic = as_symplectic(matrix)
    dim = symplectic.space.dim
    return LagrangianFrame(
        np.vstack([symplectic.entries, np.eye(dim)]), symplectic.space.doubled()
    )


def transversality(first: LagrangianFrame, second: LagrangianFrame) -> float:
    """|det[Q₁ | Q₂]| for orthonormal bases: the product of sines of principal angles."""
    first.space.require_same(second.space, "frames")
    stacked = np.hstack([first.orthonormal, second.orthonormal])
    return float(abs(np.linalg.det(stacked)))


def intersection_dimension(
    first: LagrangianFrame,
    second: LagrangianFrame,
    tol: float = DEFAULT_TOL,
) -> int:
    """dim(span A ∩ span B) = 2n - rank[A | B], rank by singular values above tol."""
    first.space.require_same(second.space, "frames")
    stacked = np.hstack([first.orthonormal, second.orthonormal])
    singular = scipy.linalg.svdvals(stacked)
    return int(first.space.dim - np.count_nonzero(singular > tol))


def intersection_basis(
    first: LagrangianFrame,
    second: LagrangianFrame,
    tol: float = DEFAULT_TOL,
) -> np.ndarray:
    """Orthonormal basis (columns) of span A ∩ span B, possibly empty."""
    first.space.require_same(second.space, "frames")
    qa = first.orthonormal
    qb = second.orthonormal
    # components of A's basis orthogonal to B
    residual = qa - qb @ (qb.T @ qa)
    _, singular, vh = np.linalg.svd(residual)
    kernel = vh[singular <= tol].T
    if kernel.size == 0:
        return np.zeros((first.space.dim, 0))
    return scipy.linalg.orth(qa @ kernel)


def signature(
    form: Union[QuadraticForm, np.ndarray],
    tol: float = DEFAULT_TOL,
    require_nondegenerate: bool = False,
) -> SignatureResult:
    """
    Signature of a symmetric form with a degeneracy count.

    Args:
        form: Quadratic form or symmetric matrix
        tol: Eigenvalues within [-tol, tol] count as degenerate
        require_nondegenerate: Raise instead of reporting degeneracy

    Returns:
        Positive, negative and degenerate eigenvalue counts
    """
    quadratic = form if isinstance(form, QuadraticForm) else QuadraticForm(form)
    if quadratic.rank == 0:
        return SignatureResult(positive=0, negative=0, degenerate=0)
    eigenvalues = scipy.linalg.eigh(quadratic.matrix, eigvals_only=True)
    result = SignatureResult(
        positive=int(np.count_nonzero(eigenvalues > tol)),
        negative=int(np.count_nonzero(eigenvalues < -tol)),
        degenerate=int(np.count_nonzero(np.abs(eigenvalues) <= tol)),
    )
    if require_nondegenerate and not result.nondegenerate:
        raise LinearAlgebraError(
            ErrorCode.DEGENERATE,
            f"form has {result.degenerate} eigenvalue(s) within {tol:g} of zero",
        )
    return result


def lagrangian_complement(frame: LagrangianFrame) -> LagrangianFrame:
    """
    Canonical Lagrangian complement W = Ω·A.

    For forms given by orthogonal matrices (every standard and block-signed
    form) Ω·A is the Euclidean orthogonal complement of A, hence Lagrangian
    and transverse.
    """
    complement = LagrangianFrame(frame.space.form_matrix @ frame.columns, frame.space)
    if intersection_dimension(frame, complement) != 0:
        raise LinearAlgebraError(
            ErrorCode.TRANSVERSALITY, "canonical complement is not transverse for this form"
        )
    return complement


def conjugate_symplectic(
    involution: Union[AntiSymplecticMap, np.ndarray],
    matrix: MatrixLike,
) -> SymplecticMatrix:
    """C·F·C for an anti-symplectic involution C."""
    symplectic = as_symplectic(matrix)
    if not isinstance(involution, AntiSymplecticMap):
        involution = AntiSymplecticMap(np.asarray(involution, dtype=float), symplectic.space)
    involution.space.require_same(symplectic.space)
    c = involution.entries
    return SymplecticMatrix(c @ symplectic.entries @ c, symplectic.space)


def matrix_direct_sum(first: SymplecticMatrix, second: SymplecticMatrix) -> SymplecticMatrix:
    return SymplecticMatrix(
        scipy.linalg.block_diag(first.entries, second.entries),
        first.space.direct_sum(second.space),
    )


def frame_direct_sum(first: LagrangianFrame, second: LagrangianFrame) -> LagrangianFrame:
    return LagrangianFrame(
        scipy.linalg.block_diag(first.columns, second.columns),
        first.space.direct_sum(second.space),
    )


def random_symmetric(dim: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    """Symmetric matrix with entries uniform in [-scale, scale]."""
    raw = rng.uniform(-scale, scale, size=(dim, dim))
    return np.triu(raw) + np.triu(raw, 1).T


def random_symplectic(
    space: SympSpace,
    rng: np.random.Generator,
    scale: float = 1.0,
) -> SymplecticMatrix:
    """exp(Ω⁻¹S) for a random symmetric generator S."""
    generator = random_symmetric(space.dim, rng, scale)
    return SymplecticMatrix(scipy.linalg.expm(space.generator_matrix(generator)), space)


def random_lagrangian(space: SympSpace, rng: np.random.Generator) -> LagrangianFrame:
    """A random symplectic image of ℝⁿ, Lagrangian by construction."""
    return horizontal(space).pushed(random_symplectic(space, rng).entries)


def random_transverse_complement(
    frame: LagrangianFrame,
    rng: np.random.Generator,
    margin: float = 1e-3,
    attempts: int = 32,
) -> LagrangianFrame:
    """Random Lagrangian transverse to ``frame`` with a margin on the principal angles."""
    for _ in range(attempts):
        candidate = random_lagrangian(frame.space, rng)
        if transversality(frame, candidate) > margin:
            return candidate
    raise LinearAlgebraError(
        ErrorCode.TRANSVERSALITY, f"no transverse complement found in {attempts} draws"
    )
