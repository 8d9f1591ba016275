"""Conley-Zehnder and Hörmander indices."""

from .conley_zehnder import (
    crossing_records,
    cz_lagrangian,
    cz_periodic,
    graph_path,
    monodromy_gap,
)
from .hormander import (
    DEFAULT_ATTEMPTS,
    compute_hormander,
    hormander,
    hormander_signature,
)

__all__ = [
    "DEFAULT_ATTEMPTS",
    "compute_hormander",
    "crossing_records",
    "cz_lagrangian",
    "cz_periodic",
    "graph_path",
    "hormander",
    "hormander_signature",
    "monodromy_gap",
]
