"""Identification maps between Novikov rings and the Seidel-element pushforward."""

import logging
from typing import Dict, Mapping, Optional, Tuple

import sympy

from ...models.report import SeidelReport, VerificationStatus
from ..errors import ErrorCode, NovikovError
from .lattice import Lattice, SphereClass, chern_weights
from .ring import ClassSymbol, Exponent, NovikovElement
from .text import format_element, parse_element


logger = logging.getLogger(__name__)

# Class-level values of δ₁∘𝒜 on QH(M), as (image symbol, sign).
PUSHFORWARD_TABLE: Dict[ClassSymbol, Tuple[ClassSymbol, int]] = {
    ClassSymbol("0111"): (ClassSymbol("01"), 1),
    ClassSymbol("1110"): (ClassSymbol("10"), -1),
}

SEIDEL_SOURCE = "[(0111)-(1110)]e^{1/2*(1000)+h*[(0001)+(1000)]}"
SEIDEL_EXPECTED = "[(01)+(10)]e^{1/2*(10)+h*[(10)-(01)]}"

# split loops: (source, expected image)
SPLIT_LOOPS = (
    ("(0111)e^{1/2*(1000)}", "(01)e^{1/2*(10)}"),
    ("-(1110)e^{-1/2*(0001)}", "(10)e^{1/2*(01)}"),
)


def pair_class(first: SphereClass, second: SphereClass) -> SphereClass:
    """j(β, β′): the class of M with components β on X and β′ on X̄."""
    if first.lattice is not Lattice.X or second.lattice is not Lattice.X:
        raise NovikovError(ErrorCode.DIMENSION_MISMATCH, "j takes two classes of X")
    return SphereClass(first.coefficients + second.coefficients, Lattice.M)


def delta1_class(cls: SphereClass) -> SphereClass:
    """δ₁(j(β, β′)) = β - β′."""
    if cls.lattice is not Lattice.M:
        raise NovikovError(ErrorCode.DIMENSION_MISMATCH, "δ₁ acts on classes of M")
    a, b, c, d = cls.coefficients
    return SphereClass((a - c, b - d), Lattice.X)


def delta1_exponent(exponent: Exponent) -> Exponent:
    """δ₁ extended linearly to exponents, including their h-part."""
    if exponent.lattice is not Lattice.M:
        raise NovikovError(ErrorCode.DIMENSION_MISMATCH, "δ₁ acts on exponents over M")

    def project(v: Tuple[sympy.Rational, ...]) -> Tuple[sympy.Rational, ...]:
        return (v[0] - v[2], v[1] - v[3])

    return Exponent(Lattice.X, project(exponent.const), project(exponent.h))


def half_diagonal_maslov(exponent: Exponent) -> int:
    """½·μ△(β) = c₁(δ₁β), evaluated on the h-free part."""
    projected = delta1_exponent(exponent)
    value = sum(w * a for w, a in zip(chern_weights(Lattice.X), projected.const))
    value = sympy.Rational(value)
    if not value.is_integer:
        raise NovikovError(ErrorCode.RESIDUAL, f"½μ△ = {value} is not an integer")
    return int(value)


def tau(element: NovikovElement) -> NovikovElement:
    """Exponent negation on Λ_ω (lattice X)."""
    if element.lattice not in (None, Lattice.X):
        raise NovikovError(ErrorCode.DIMENSION_MISMATCH, "τ acts on elements over X")
    return element.map_terms(lambda s, e, c: (s, -e, c))


def delta2(element: NovikovElement) -> NovikovElement:
    """a·e^β ↦ (-1)^{½μ△(β)}·a·e^{-δ₁β} for elements over M."""
    if element.lattice not in (None, Lattice.M):
        raise NovikovError(ErrorCode.DIMENSION_MISMATCH, "δ₂ acts on elements over M")

    def twist(symbol: ClassSymbol, exponent: Exponent, coefficient: int):
        sign = -1 if half_diagonal_maslov(exponent) % 2 else 1
        return symbol, -delta1_exponent(exponent), sign * coefficient

    return element.map_terms(twist)


def tau_and_delta2(element: NovikovElement) -> NovikovElement:
    """τ over X, δ₂ over M."""
    if element.lattice is Lattice.M:
        return delta2(element)
    return tau(element)


def albers_delta1_pushforward(
    element: NovikovElement,
    table: Optional[Mapping[ClassSymbol, Tuple[ClassSymbol, int]]] = None,
) -> NovikovElement:
    """
    Push an element over M to X term by term.

    Args:
        element: Element over M
        table: Extra class values merged over the built-in ones

    Raises:
        NovikovError: UNKNOWN_CLASS for symbols without a known image
    """
    lookup = dict(PUSHFORWARD_TABLE)
    if table:
        lookup.update(table)

    def push(symbol: ClassSymbol, exponent: Exponent, coefficient: int):
        if symbol not in lookup:
            raise NovikovError(ErrorCode.UNKNOWN_CLASS, f"no pushforward known for {symbol}")
        image, sign = lookup[symbol]
        return image, delta1_exponent(exponent), sign * coefficient

    return element.map_terms(push)


def _term_diff(expected: NovikovElement, actual: NovikovElement) -> Tuple[list, list]:
    want = expected.coefficients()
    got = actual.coefficients()
    missing = []
    unexpected = []
    for key in sorted(set(want) | set(got), key=lambda k: (k[1].key, k[0].digits)):
        if want.get(key) == got.get(key):
            continue
        symbol, exponent = key
        if key in want:
            missing.append(format_element(NovikovElement(((symbol, exponent, want[key]),))))
        if key in got:
            unexpected.append(format_element(NovikovElement(((symbol, exponent, got[key]),))))
    return missing, unexpected


def verify_seidel_pushforward(psi: Optional[NovikovElement] = None) -> SeidelReport:
    """
    Push the non-split Seidel element forward and compare exactly.

    The split-loop pushforwards are checked alongside; any failure makes
    the report a mismatch.
    """
    source = psi if psi is not None else parse_element(SEIDEL_SOURCE)
    expected = parse_element(SEIDEL_EXPECTED)
    actual = albers_delta1_pushforward(source)
    missing, unexpected = _term_diff(expected, actual)

    split_checks = {}
    for text, image in SPLIT_LOOPS:
        split_checks[text] = albers_delta1_pushforward(parse_element(text)) == parse_element(image)

    passed = actual == expected and all(split_checks.values())
    if not passed:
        logger.warning(f"Seidel pushforward mismatch: missing {missing}, unexpected {unexpected}")
    return SeidelReport(
        source=format_element(source),
        expected=format_element(expected),
        actual=format_element(actual),
        missing=missing,
        unexpected=unexpected,
        split_checks=split_checks,
        status=VerificationStatus.PASS if passed else VerificationStatus.FAIL,
    )
