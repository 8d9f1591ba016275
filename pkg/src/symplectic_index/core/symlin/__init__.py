"""Symplectic linear algebra: spaces, maps, Lagrangian frames and signatures."""

from .operations import (
    DEFAULT_TOL,
    as_symplectic,
    conjugate_symplectic,
    frame_direct_sum,
    graph_lagrangian,
    intersection_basis,
    intersection_dimension,
    is_symplectic,
    lagrangian_complement,
    matrix_direct_sum,
    random_lagrangian,
    random_symmetric,
    random_symplectic,
    random_transverse_complement,
    signature,
    transversality,
)
from .space import (
    AntiSymplecticMap,
    LagrangianFrame,
    QuadraticForm,
    SignatureResult,
    SymplecticMatrix,
    SympSpace,
    complex_conjugation,
    diagonal,
    horizontal,
    standard_form,
    swap_involution,
    vertical,
)

__all__ = [
    "DEFAULT_TOL",
    "AntiSymplecticMap",
    "LagrangianFrame",
    "QuadraticForm",
    "SignatureResult",
    "SymplecticMatrix",
    "SympSpace",
    "as_symplectic",
    "complex_conjugation",
    "conjugate_symplectic",
    "diagonal",
    "frame_direct_sum",
    "graph_lagrangian",
    "horizontal",
    "intersection_basis",
    "intersection_dimension",
    "is_symplectic",
    "lagrangian_complement",
    "matrix_direct_sum",
    "random_lagrangian",
    "random_symmetric",
    "random_symplectic",
    "random_transverse_complement",
    "signature",
    "standard_form",
    "swap_involution",
    "transversality",
    "vertical",
]
