"""The diagonal double Ψ(t) = diag(φ_t, φ_{2-t}·φ₂⁻¹) and its index identities."""

import logging

import numpy as np

from ...models.report import DiagonalReport, VerificationStatus
from ..czindex import cz_periodic
from ..errors import ErrorCode, LinearAlgebraError
from ..maslov import (
    DEFAULT_GRID,
    Segment,
    SymplecticPathSpec,
    direct_sum,
    restrict,
    reverse,
    right_multiply,
)
from ..symlin import DEFAULT_TOL, SymplecticMatrix, diagonal, swap_involution
from .double import NONDEGENERACY_MARGIN, SYMMETRY_TOL, DoubledPath, HalfPathData, defect_form, double_path
from .theorem import verify_index_theorem


logger = logging.getLogger(__name__)


def _on_negated_space(spec: SymplecticPathSpec) -> SymplecticPathSpec:
    """The same matrices viewed in (V, -ω); generators change sign."""
    space = spec.space.negated()
    segments = tuple(Segment(-s.generator, s.duration) for s in spec.segments)
    return SymplecticPathSpec(space, segments, SymplecticMatrix(spec.start_matrix, space))


def diagonal_double(phi: SymplecticPathSpec) -> DoubledPath:
    """
    Ψ(t) = diag(φ(t), φ(T - t)·φ(T)⁻¹) on (V ⊕ V, ω ⊕ -ω).

    Ψ is symmetric about T/2 under the swap c′ and Ψ(T) = diag(φ(T), φ(T)⁻¹).

    Raises:
        LinearAlgebraError: RESIDUAL when Ψ fails the c′ symmetry
    """
    end_inverse = SymplecticMatrix(phi.end_matrix, phi.space).inverse().entries
    mirrored = right_multiply(reverse(phi), end_inverse)
    psi = direct_sum(phi, _on_negated_space(mirrored))
    doubled = DoubledPath(
        full=psi,
        monodromy=SymplecticMatrix(psi.end_matrix, psi.space),
        involution=swap_involution(psi.space),
    )
    if not doubled.check_symmetry(tol=SYMMETRY_TOL):
        raise LinearAlgebraError(
            ErrorCode.RESIDUAL,
            f"diagonal double is not c′-symmetric (residual {doubled.symmetry_residual():.3e})",
        )
    return doubled


def diagonal_half(phi: SymplecticPathSpec) -> HalfPathData:
    """Ψ on [0, T/2] with the swap involution and △ as reference."""
    psi = diagonal_double(phi).full
    half = restrict(psi, 0.0, psi.duration / 2.0)
    return HalfPathData(half, swap_involution(psi.space), diagonal(psi.space))


def anti_diagonal_residual(matrix: np.ndarray, monodromy: np.ndarray, form: np.ndarray) -> float:
    """
    Distance of Q from [[0, M], [Mᵀ, 0]] with M = (1 - φ₂)ᵀΩ.

    As a quadratic form this is Q(ξ₁, ξ₂) = 2ω((1 - φ₂)ξ₁, ξ₂).
    """
    k = monodromy.shape[0]
    block = (np.eye(k) - monodromy).T @ form
    expected = np.block([[np.zeros((k, k)), block], [block.T, np.zeros((k, k))]])
    return float(np.max(np.abs(matrix - expected)))


def verify_diagonal(
    phi: SymplecticPathSpec,
    tol: float = DEFAULT_TOL,
    grid: int = DEFAULT_GRID,
    margin: float = NONDEGENERACY_MARGIN,
) -> DiagonalReport:
    """
    Check the index theorem for the diagonal double of φ and its three corollaries.

    Args:
        phi: Path with φ(0) = 1 on [0, T]
        tol: Base tolerance
        grid: Scan resolution
        margin: Nondegeneracy margin

    Returns:
        Report with sign Q = 0, μ_loop = 2·μ_half and μ_half = cz_periodic(φ)
    """
    data = diagonal_half(phi)
    doubled = double_path(data)
    base = verify_index_theorem(data, tol, grid, margin, doubled=doubled)
    if base.status is VerificationStatus.SKIP:
        return DiagonalReport(**base.model_dump())

    q_matrix = defect_form(doubled).form.matrix
    scale = max(1.0, float(np.max(np.abs(q_matrix))))
    residual = anti_diagonal_residual(q_matrix, phi.end_matrix, phi.space.form_matrix)
    sign_q_zero = base.q_signature == 0 and residual <= 1e-6 * scale

    # μ(Ψ(t)△, △) on the first half is μ₊ of the half-path data
    mu_half_twice = base.mu_plus_twice
    factor = cz_periodic(phi, tol=tol, grid=grid)
    loop_ok = base.mu_loop_twice == 2 * mu_half_twice
    factor_ok = mu_half_twice == factor.value_twice

    passed = base.passed and sign_q_zero and loop_ok and factor_ok
    if not passed:
        logger.warning(
            f"Diagonal identities: sign Q = 0 {sign_q_zero}, μ_loop = 2μ_half {loop_ok}, "
            f"μ_half = cz(φ) {factor_ok}"
        )
    values = base.model_dump(exclude={"status"})
    return DiagonalReport(
        **values,
        status=VerificationStatus.PASS if passed else VerificationStatus.FAIL,
        mu_half_twice=mu_half_twice,
        factor_index_twice=factor.value_twice,
        sign_q_zero=sign_q_zero,
        loop_equals_twice_half=loop_ok,
        half_equals_factor_index=factor_ok,
    )
