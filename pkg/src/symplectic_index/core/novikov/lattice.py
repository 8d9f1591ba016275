"""Sphere-class lattices of X = S²×S² and M = X × X̄ with Chern and area functionals."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple, Union

import sympy

from ...models.report import MonotonicityReport, MonotonicityVerdict
from ..errors import ErrorCode, NovikovError


class Lattice(str, Enum):
    """π₂ lattices: X has basis (10), (01); M has (1000), (0100), (0010), (0001)."""

    X = "X"
    M = "M"

    @property
    def rank(self) -> int:
        return 2 if self is Lattice.X else 4

    @classmethod
    def of_rank(cls, rank: int) -> "Lattice":
        if rank == 2:
            return cls.X
        if rank == 4:
            return cls.M
        raise NovikovError(ErrorCode.DIMENSION_MISMATCH, f"no lattice of rank {rank}")

    def basis_label(self, index: int) -> str:
        digits = ["0"] * self.rank
        digits[index] = "1"
        return "".join(digits)


# c₁ on the basis; the second factor of M carries the reversed form
_CHERN = {Lattice.X: (2, 2), Lattice.M: (2, 2, -2, -2)}


def chern_weights(lattice: Lattice) -> Tuple[int, ...]:
    return _CHERN[lattice]


@dataclass(frozen=True)
class SphereClass:
    """An integral class Σ aᵢ·eᵢ in one of the lattices."""

    coefficients: Tuple[int, ...]
    lattice: Lattice

    def __post_init__(self) -> None:
        coefficients = tuple(int(c) for c in self.coefficients)
        if len(coefficients) != self.lattice.rank:
            raise NovikovError(
                ErrorCode.DIMENSION_MISMATCH,
                f"lattice {self.lattice.value} needs {self.lattice.rank} coefficients, got {len(coefficients)}",
            )
        object.__setattr__(self, "coefficients", coefficients)

    @classmethod
    def of(cls, digits: str) -> "SphereClass":
        """Class from a label such as ``"0100"``."""
        return cls(tuple(int(d) for d in digits), Lattice.of_rank(len(digits)))

    @classmethod
    def zero(cls, lattice: Lattice) -> "SphereClass":
        return cls((0,) * lattice.rank, lattice)

    def _check(self, other: "SphereClass") -> None:
        if other.lattice is not self.lattice:
            raise NovikovError(ErrorCode.DIMENSION_MISMATCH, "classes live in different lattices")

    def __add__(self, other: "SphereClass") -> "SphereClass":
        self._check(other)
        return SphereClass(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)), self.lattice)

    def __sub__(self, other: "SphereClass") -> "SphereClass":
        return self + (-other)

    def __neg__(self) -> "SphereClass":
        return SphereClass(tuple(-a for a in self.coefficients), self.lattice)

    def __str__(self) -> str:
        parts = []
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            label = f"({self.lattice.basis_label(i)})"
            sign = "-" if a < 0 else "+"
            magnitude = "" if abs(a) == 1 else f"{abs(a)}*"
            parts.append(f"{sign}{magnitude}{label}")
        text = "".join(parts).lstrip("+")
        return text or "0"


def chern(cls: SphereClass) -> int:
    """c₁: 2a + 2b on X, 2a + 2b - 2c - 2d on M."""
    return sum(w * a for w, a in zip(chern_weights(cls.lattice), cls.coefficients))


RationalLike = Union[int, str, sympy.Rational]


def to_rational(value: RationalLike) -> sympy.Rational:
    result = sympy.Rational(value)
    if not isinstance(result, sympy.Rational):
        raise ValueError(f"{value!r} is not a rational number")
    return result


def area(cls: SphereClass, lam: RationalLike) -> sympy.Rational:
    """
    Symplectic area for ω₀ ⊕ λω₀ (and its reverse on the second factor of M).

    Raises:
        ValueError: when λ ≤ 1
    """
    lam = to_rational(lam)
    if lam <= 1:
        raise ValueError(f"λ must exceed 1, got {lam}")
    weights: Sequence[sympy.Rational]
    if cls.lattice is Lattice.X:
        weights = (sympy.Integer(1), lam)
    else:
        weights = (sympy.Integer(1), lam, sympy.Integer(-1), -lam)
    return sympy.Rational(sum(w * a for w, a in zip(weights, cls.coefficients)))


def default_witness() -> SphereClass:
    """(0100) - (1000) on M."""
    return SphereClass.of("0100") - SphereClass.of("1000")


def monotonicity_witness(lam: RationalLike, cls: Optional[SphereClass] = None) -> MonotonicityReport:
    """
    Test whether a class witnesses non-monotonicity: c₁ = 0 but area ≠ 0.

    Args:
        lam: Area ratio λ > 1 of the second sphere factor
        cls: Class to test; defaults to (0100) - (1000)

    Returns:
        Report with chern, area and the verdict
    """
    if cls is None:
        cls = default_witness()
    value = area(cls, lam)
    c1 = chern(cls)
    verdict = (
        MonotonicityVerdict.NOT_MONOTONE if c1 == 0 and value != 0 else MonotonicityVerdict.NOT_A_WITNESS
    )
    return MonotonicityReport(
        sphere_class=str(cls),
        lattice=cls.lattice.value,
        lam=str(to_rational(lam)),
        chern=c1,
        area=str(value),
        verdict=verdict,
    )
