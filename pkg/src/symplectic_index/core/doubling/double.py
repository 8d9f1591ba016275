"""Anti-symplectic doubling of half-paths and the defect form."""

import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import scipy.linalg

from ..errors import ErrorCode, LinearAlgebraError
from ..maslov import (
    SymplecticPathSpec,
    concatenate,
    conjugate_path,
    evaluate_path,
    random_path,
    reverse,
    right_multiply,
)
from ..symlin import (
    AntiSymplecticMap,
    LagrangianFrame,
    QuadraticForm,
    SymplecticMatrix,
    SympSpace,
    complex_conjugation,
    horizontal,
    intersection_dimension,
)


logger = logging.getLogger(__name__)

# Relative bound on ‖B - Bᵀ‖ for the defect form.
SYMMETRY_TOL = 1e-6

# Margin below which transversality, 1 - F₂ or Q count as degenerate.
NONDEGENERACY_MARGIN = 1e-6


@dataclass(frozen=True, eq=False)
class HalfPathData:
    """
    A half-path F on [0, T] with F(0) = 1, an anti-symplectic involution c
    and a reference Lagrangian fixed (as a subspace) by c.
    """

    half: SymplecticPathSpec
    involution: Optional[AntiSymplecticMap] = field(default=None)
    reference: Optional[LagrangianFrame] = field(default=None)

    def __post_init__(self) -> None:
        space = self.half.space
        if self.involution is None:
            object.__setattr__(self, "involution", complex_conjugation(space))
        if self.reference is None:
            object.__setattr__(self, "reference", horizontal(space))
        self.c.space.require_same(space, "involution and half-path")
        self.frame.space.require_same(space, "reference and half-path")

        if np.max(np.abs(self.half.start_matrix - np.eye(space.dim))) > 1e-9:
            raise LinearAlgebraError(ErrorCode.OUT_OF_RANGE, "half-path must start at the identity")
        if intersection_dimension(self.frame, self.frame.pushed(self.c.entries), 1e-8) != space.dim_half:
            raise LinearAlgebraError(
                ErrorCode.NOT_INVOLUTION, "involution does not preserve the reference Lagrangian"
            )

    @property
    def c(self) -> AntiSymplecticMap:
        assert self.involution is not None
        return self.involution

    @property
    def frame(self) -> LagrangianFrame:
        assert self.reference is not None
        return self.reference

    @property
    def space(self) -> SympSpace:
        return self.half.space

    @property
    def duration(self) -> float:
        return self.half.duration


@dataclass(frozen=True, eq=False)
class DoubledPath:
    """The doubled path on [0, 2T] with its monodromy F₂ = F(2T)."""

    full: SymplecticPathSpec
    monodromy: SymplecticMatrix
    involution: AntiSymplecticMap

    def symmetry_residual(self, samples: int = 64) -> float:
        """max over samples of ‖F(t) - c·F(2T - t)·F₂⁻¹·c‖∞."""
        c = self.involution.entries
        inverse = self.monodromy.inverse().entries
        total = self.full.duration
        worst = 0.0
        for t in np.linspace(0.0, total, samples):
            left = evaluate_path(self.full, float(t)).entries
            right = c @ evaluate_path(self.full, float(total - t)).entries @ inverse @ c
            worst = max(worst, float(np.max(np.abs(left - right))))
        return worst

    def check_symmetry(self, samples: int = 64, tol: float = 1e-8) -> bool:
        scale = max(1.0, float(np.max(np.abs(self.monodromy.entries))))
        return self.symmetry_residual(samples) <= tol * scale


def reflected_half(data: HalfPathData) -> SymplecticPathSpec:
    """
    F⁻(t) = c·F(T - t)·F(T)⁻¹·c, starting at the identity.

    Its segments are those of F in reverse order, each generator mapped by
    S ↦ cᵀSc.
    """
    c = data.c.entries
    end_inverse = SymplecticMatrix(data.half.end_matrix, data.space).inverse().entries
    return right_multiply(reverse(conjugate_path(data.half, c)), c @ end_inverse @ c)


def double_path(data: HalfPathData) -> DoubledPath:
    """
    Glue F on [0, T] to t ↦ F⁻(t - T)·F(T) on [T, 2T].

    Returns:
        Doubled path with monodromy F₂ = c·F(T)⁻¹·c·F(T)
    """
    second = right_multiply(reflected_half(data), data.half.end_matrix)
    full = concatenate(data.half, second)
    monodromy = SymplecticMatrix(full.end_matrix, data.space)
    logger.debug(f"Doubled a {len(data.half.segments)}-segment half-path to {len(full.segments)} segments")
    return DoubledPath(full=full, monodromy=monodromy, involution=data.c)


@dataclass(frozen=True, eq=False)
class DefectForm:
    """Q = sym((1 - F₂)ᵀΩc) with diagnostics."""

    form: QuadraticForm
    asymmetry: float
    smallest: float

    def degenerate(self, margin: float = NONDEGENERACY_MARGIN) -> bool:
        return self.smallest <= margin


def defect_form(doubled: DoubledPath) -> DefectForm:
    """
    Defect form of a doubled path.

    Raises:
        LinearAlgebraError: ASYMMETRIC_FORM when (1 - F₂)ᵀΩc is not symmetric
    """
    space = doubled.full.space
    raw = (np.eye(space.dim) - doubled.monodromy.entries).T @ space.form_matrix @ doubled.involution.entries
    asymmetry = float(np.max(np.abs(raw - raw.T)))
    if asymmetry > SYMMETRY_TOL * max(1.0, float(np.max(np.abs(raw)))):
        raise LinearAlgebraError(
            ErrorCode.ASYMMETRIC_FORM, f"defect form is not symmetric (‖B - Bᵀ‖ = {asymmetry:.3e})"
        )
    form = QuadraticForm((raw + raw.T) / 2.0)
    eigenvalues = scipy.linalg.eigh(form.matrix, eigvals_only=True)
    return DefectForm(form=form, asymmetry=asymmetry, smallest=float(np.min(np.abs(eigenvalues))))


def random_half_path(space: SympSpace, rng: np.random.Generator) -> SymplecticPathSpec:
    """1 to 4 random segments, rescaled to duration 1."""
    return random_path(space, rng, segments=(1, 4), scale=1.5, durations=(0.2, 1.0), total=1.0)
