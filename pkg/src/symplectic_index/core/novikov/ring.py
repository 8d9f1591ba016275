"""Exact Novikov-ring elements: class symbols weighted by e^{exponent}."""

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

import sympy

from ..errors import ErrorCode, NovikovError
from .lattice import Lattice, SphereClass, RationalLike, to_rational


H = sympy.Symbol("h")

RationalVector = Tuple[sympy.Rational, ...]


def _vector(values: Iterable[RationalLike]) -> RationalVector:
    return tuple(to_rational(v) for v in values)


@dataclass(frozen=True)
class Exponent:
    """Σ (constᵢ + h·hᵢ)·eᵢ with exact rational coefficients."""

    lattice: Lattice
    const: RationalVector
    h: RationalVector

    def __post_init__(self) -> None:
        const = _vector(self.const)
        h = _vector(self.h)
        if len(const) != self.lattice.rank or len(h) != self.lattice.rank:
            raise NovikovError(
                ErrorCode.DIMENSION_MISMATCH,
                f"exponent on {self.lattice.value} needs {self.lattice.rank} coefficients",
            )
        object.__setattr__(self, "const", const)
        object.__setattr__(self, "h", h)

    @classmethod
    def zero(cls, lattice: Lattice) -> "Exponent":
        return cls(lattice, (0,) * lattice.rank, (0,) * lattice.rank)

    @classmethod
    def of_class(cls, sphere: SphereClass, scale: RationalLike = 1, h_scale: RationalLike = 0) -> "Exponent":
        """scale·β + h_scale·h·β."""
        scale = to_rational(scale)
        h_scale = to_rational(h_scale)
        return cls(
            sphere.lattice,
            tuple(scale * a for a in sphere.coefficients),
            tuple(h_scale * a for a in sphere.coefficients),
        )

    def _check(self, other: "Exponent") -> None:
        if other.lattice is not self.lattice:
            raise NovikovError(ErrorCode.DIMENSION_MISMATCH, "exponents live in different lattices")

    def __add__(self, other: "Exponent") -> "Exponent":
        self._check(other)
        return Exponent(
            self.lattice,
            tuple(a + b for a, b in zip(self.const, other.const)),
            tuple(a + b for a, b in zip(self.h, other.h)),
        )

    def __sub__(self, other: "Exponent") -> "Exponent":
        return self + (-other)

    def __neg__(self) -> "Exponent":
        return Exponent(self.lattice, tuple(-a for a in self.const), tuple(-a for a in self.h))

    def scaled(self, factor: RationalLike) -> "Exponent":
        factor = to_rational(factor)
        return Exponent(self.lattice, tuple(factor * a for a in self.const), tuple(factor * a for a in self.h))

    @property
    def is_zero(self) -> bool:
        return not any(self.const) and not any(self.h)

    @property
    def key(self) -> Tuple[sympy.Rational, ...]:
        return self.const + self.h

    def as_expr(self) -> sympy.Expr:
        """The exponent as a sympy expression in h and basis symbols e_(digits)."""
        basis = [sympy.Symbol(f"e_{self.lattice.basis_label(i)}") for i in range(self.lattice.rank)]
        return sympy.Add(*((c + H * k) * e for c, k, e in zip(self.const, self.h, basis)))


@dataclass(frozen=True, order=True)
class ClassSymbol:
    """Basis label of quantum homology: (ab) on X, (abcd) on M."""

    digits: str

    def __post_init__(self) -> None:
        if len(self.digits) not in (2, 4) or any(d not in "01" for d in self.digits):
            raise NovikovError(ErrorCode.UNKNOWN_CLASS, f"invalid class symbol ({self.digits})")

    @property
    def lattice(self) -> Lattice:
        return Lattice.of_rank(len(self.digits))

    def __str__(self) -> str:
        return f"({self.digits})"


Term = Tuple[ClassSymbol, Exponent, int]


def _term_order(term: Term) -> Tuple:
    symbol, exponent, _ = term
    return (exponent.key, symbol.digits)


@dataclass(frozen=True)
class NovikovElement:
    """
    Finite sum Σ aᵢ·(symbolᵢ)·e^{exponentᵢ} with integer coefficients.

    Terms are merged on (symbol, exponent), zero coefficients dropped and
    the rest sorted by exponent then symbol, so equality is structural.
    """

    terms: Tuple[Term, ...] = ()

    def __post_init__(self) -> None:
        merged: Dict[Tuple[ClassSymbol, Exponent], int] = defaultdict(int)
        # symbols and exponents may differ in lattice (δ₂ moves only the exponents)
        symbols = {symbol.lattice for symbol, _, _ in self.terms}
        exponents = {exponent.lattice for _, exponent, _ in self.terms}
        if len(symbols) > 1 or len(exponents) > 1:
            raise NovikovError(ErrorCode.DIMENSION_MISMATCH, "element mixes the X and M lattices")
        for symbol, exponent, coefficient in self.terms:
            merged[(symbol, exponent)] += int(coefficient)
        canonical = tuple(
            sorted(((s, e, c) for (s, e), c in merged.items() if c != 0), key=_term_order)
        )
        object.__setattr__(self, "terms", canonical)

    @classmethod
    def term(cls, symbol: str, exponent: Optional[Exponent] = None, coefficient: int = 1) -> "NovikovElement":
        cs = ClassSymbol(symbol)
        if exponent is None:
            exponent = Exponent.zero(cs.lattice)
        return cls(((cs, exponent, coefficient),))

    @property
    def lattice(self) -> Optional[Lattice]:
        """Lattice of the exponents; None for the zero element."""
        return self.terms[0][1].lattice if self.terms else None

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficients(self) -> Dict[Tuple[ClassSymbol, Exponent], int]:
        return {(s, e): c for s, e, c in self.terms}

    def __add__(self, other: "NovikovElement") -> "NovikovElement":
        return NovikovElement(self.terms + other.terms)

    def __neg__(self) -> "NovikovElement":
        return NovikovElement(tuple((s, e, -c) for s, e, c in self.terms))

    def __sub__(self, other: "NovikovElement") -> "NovikovElement":
        return self + (-other)

    def map_terms(self, func) -> "NovikovElement":
        """Apply ``func(symbol, exponent, coefficient) -> term`` to every term."""
        return NovikovElement(tuple(func(s, e, c) for s, e, c in self.terms))
