"""Exact Novikov-ring arithmetic for S²×S² and its double."""

from .lattice import (
    Lattice,
    SphereClass,
    area,
    chern,
    default_witness,
    monotonicity_witness,
    to_rational,
)
from .ring import ClassSymbol, Exponent, NovikovElement
from .seidel import (
    PUSHFORWARD_TABLE,
    SEIDEL_EXPECTED,
    SEIDEL_SOURCE,
    SPLIT_LOOPS,
    albers_delta1_pushforward,
    delta1_class,
    delta1_exponent,
    delta2,
    half_diagonal_maslov,
    pair_class,
    tau,
    tau_and_delta2,
    verify_seidel_pushforward,
)
from .text import format_element, parse_element

__all__ = [
    "PUSHFORWARD_TABLE",
    "SEIDEL_EXPECTED",
    "SEIDEL_SOURCE",
    "SPLIT_LOOPS",
    "ClassSymbol",
    "Exponent",
    "Lattice",
    "NovikovElement",
    "SphereClass",
    "albers_delta1_pushforward",
    "area",
    "chern",
    "default_witness",
    "delta1_class",
    "delta1_exponent",
    "delta2",
    "format_element",
    "half_diagonal_maslov",
    "monotonicity_witness",
    "pair_class",
    "parse_element",
    "tau",
    "tau_and_delta2",
    "to_rational",
    "verify_seidel_pushforward",
]
