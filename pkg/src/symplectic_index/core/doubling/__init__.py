"""Doubling of symplectic half-paths, the defect form and the diagonal double."""

from .diagonal import anti_diagonal_residual, diagonal_double, diagonal_half, verify_diagonal
from .double import (
    NONDEGENERACY_MARGIN,
    DefectForm,
    DoubledPath,
    HalfPathData,
    defect_form,
    double_path,
    random_half_path,
    reflected_half,
)
from .theorem import (
    boundary_gaps,
    check_boundaries,
    check_nondegeneracy,
    verify_index_theorem,
    verify_reflection,
)

__all__ = [
    "NONDEGENERACY_MARGIN",
    "DefectForm",
    "DoubledPath",
    "HalfPathData",
    "anti_diagonal_residual",
    "boundary_gaps",
    "check_boundaries",
    "check_nondegeneracy",
    "defect_form",
    "diagonal_double",
    "diagonal_half",
    "double_path",
    "random_half_path",
    "reflected_half",
    "verify_diagonal",
    "verify_index_theorem",
    "verify_reflection",
]
