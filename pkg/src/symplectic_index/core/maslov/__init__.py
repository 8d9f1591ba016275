"""Symplectic paths, crossings and the Robbin-Salamon Maslov index."""

from .crossings import (
    DEFAULT_GRID,
    Crossing,
    CrossingKind,
    crossing_form,
    find_crossings,
    find_relative_crossings,
)
from .half_integer import HalfInteger
from .index import (
    MaslovResult,
    compute_maslov,
    compute_maslov_pair,
    maslov_index,
    maslov_index_pair,
)
from .path import (
    LagrangianPath,
    Segment,
    SymplecticPathSpec,
    concatenate,
    conjugate_path,
    direct_sum,
    evaluate_path,
    extend_to,
    generic_generator,
    left_multiply,
    perturb,
    random_path,
    rescale,
    restrict,
    reverse,
    right_multiply,
    sample_path,
)

__all__ = [
    "DEFAULT_GRID",
    "Crossing",
    "CrossingKind",
    "HalfInteger",
    "LagrangianPath",
    "MaslovResult",
    "Segment",
    "SymplecticPathSpec",
    "compute_maslov",
    "compute_maslov_pair",
    "concatenate",
    "conjugate_path",
    "crossing_form",
    "direct_sum",
    "evaluate_path",
    "extend_to",
    "find_crossings",
    "find_relative_crossings",
    "generic_generator",
    "left_multiply",
    "maslov_index",
    "maslov_index_pair",
    "perturb",
    "random_path",
    "rescale",
    "restrict",
    "reverse",
    "right_multiply",
    "sample_path",
]
