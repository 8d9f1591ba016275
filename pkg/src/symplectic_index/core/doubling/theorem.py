"""Index comparison for doubled paths: μ₊ + μ₋ - μ_loop = ½·sign Q."""

import logging
from typing import Optional, Tuple

import numpy as np

from ...models.report import DefectReport, VerificationStatus
from ..czindex import cz_lagrangian, cz_periodic, monodromy_gap
from ..errors import NondegeneracyError
from ..maslov import DEFAULT_GRID
from ..symlin import DEFAULT_TOL, signature, transversality
from .double import (
    NONDEGENERACY_MARGIN,
    DefectForm,
    DoubledPath,
    HalfPathData,
    defect_form,
    double_path,
    reflected_half,
)


logger = logging.getLogger(__name__)


def boundary_gaps(data: HalfPathData) -> Tuple[float, float]:
    """Transversality of F(T)·V and F⁻(T)·V to V."""
    c = data.c.entries
    end = data.half.end_matrix
    plus = transversality(data.frame.pushed(end), data.frame)
    minus = transversality(data.frame.pushed(c @ np.linalg.inv(end) @ c), data.frame)
    return plus, minus


def _require(condition: str, gap: float, margin: float) -> None:
    if gap <= margin:
        raise NondegeneracyError(condition, f"{condition} gap {gap:.3e} within margin {margin:.1e}")


def check_boundaries(data: HalfPathData, margin: float = NONDEGENERACY_MARGIN) -> None:
    """Raise NondegeneracyError unless F(T)·V and F⁻(T)·V are transverse to V."""
    plus_gap, minus_gap = boundary_gaps(data)
    _require("boundary_plus", plus_gap, margin)
    _require("boundary_minus", minus_gap, margin)


def check_nondegeneracy(
    data: HalfPathData, doubled: DoubledPath, margin: float = NONDEGENERACY_MARGIN
) -> DefectForm:
    """
    Check the preconditions of the index comparison.

    Conditions are tried in the order boundary_plus, boundary_minus,
    monodromy, defect_form.

    Returns:
        The defect form of ``doubled``

    Raises:
        NondegeneracyError: naming the first condition that fails
        LinearAlgebraError: ASYMMETRIC_FORM from the defect form
    """
    check_boundaries(data, margin)
    _require("monodromy", monodromy_gap(doubled.full), margin)
    defect = defect_form(doubled)
    if defect.degenerate(margin):
        raise NondegeneracyError("defect_form", "defect form Q is degenerate")
    return defect


def _skip(error: NondegeneracyError, **values) -> DefectReport:
    logger.debug(f"Skipping: {error.message}")
    return DefectReport(status=VerificationStatus.SKIP, skipped_condition=error.condition, **values)


def verify_index_theorem(
    data: HalfPathData,
    tol: float = DEFAULT_TOL,
    grid: int = DEFAULT_GRID,
    margin: float = NONDEGENERACY_MARGIN,
    doubled: Optional[DoubledPath] = None,
) -> DefectReport:
    """
    Compare the indices of a half-path, its reflection and its double.

    A failing nondegeneracy condition is reported as a skip, not raised.

    Args:
        data: Half-path with involution and reference
        tol: Base tolerance for crossings
        grid: Scan resolution
        margin: Nondegeneracy margin
        doubled: Precomputed double of ``data``

    Returns:
        Report whose defect is μ₊ + μ₋ - μ_loop - ½·sign Q
    """
    if doubled is None:
        doubled = double_path(data)
    try:
        defect = check_nondegeneracy(data, doubled, margin)
    except NondegeneracyError as e:
        if e.condition == "defect_form":
            return _skip(e, q_asymmetry=defect_form(doubled).asymmetry)
        return _skip(e)

    mu_plus = cz_lagrangian(data.half, data.frame, tol, grid).value
    mu_minus = cz_lagrangian(reflected_half(data), data.frame, tol, grid).value
    mu_loop = cz_periodic(doubled.full, tol=tol, grid=grid).value
    q_signature = signature(defect.form, tol=margin).signature
    # twice (μ₊ + μ₋ - μ_loop) minus sign Q
    defect_twice = (mu_plus + mu_minus - mu_loop).twice - q_signature
    status = VerificationStatus.PASS if defect_twice == 0 else VerificationStatus.FAIL
    if status is VerificationStatus.FAIL:
        logger.warning(
            f"Index defect {defect_twice}/2: μ₊={mu_plus} μ₋={mu_minus} μ_loop={mu_loop} sign Q={q_signature}"
        )
    return DefectReport(
        mu_plus_twice=mu_plus.twice,
        mu_minus_twice=mu_minus.twice,
        mu_loop_twice=mu_loop.twice,
        q_signature=q_signature,
        defect_twice=defect_twice,
        status=status,
        q_asymmetry=defect.asymmetry,
    )


def verify_reflection(
    data: HalfPathData,
    tol: float = DEFAULT_TOL,
    grid: int = DEFAULT_GRID,
    margin: float = NONDEGENERACY_MARGIN,
) -> DefectReport:
    """cz_lagrangian(F) against cz_lagrangian(F⁻); only μ₊ and μ₋ are filled in."""
    try:
        check_boundaries(data, margin)
    except NondegeneracyError as e:
        return _skip(e)
    mu_plus = cz_lagrangian(data.half, data.frame, tol, grid).value
    mu_minus = cz_lagrangian(reflected_half(data), data.frame, tol, grid).value
    return DefectReport(
        mu_plus_twice=mu_plus.twice,
        mu_minus_twice=mu_minus.twice,
        status=VerificationStatus.PASS if mu_plus == mu_minus else VerificationStatus.FAIL,
    )
