"""Exact half-integers, stored as twice their value."""

from typing import Any, Union

import sympy

from ..errors import ErrorCode, SymplecticIndexError

Number = Union[int, float, "HalfInteger"]


class HalfInteger:
    """An element of ½ℤ held exactly as an integer ``twice``."""

    __slots__ = ("_twice",)

    def __init__(self, twice: int):
        self._twice = int(twice)

    @property
    def twice(self) -> int:
        return self._twice

    @classmethod
    def from_float(cls, value: float, tol: float = 1e-6) -> "HalfInteger":
        """Round a float to ½ℤ, rejecting residuals above ``tol``."""
        doubled = round(2.0 * value)
        if abs(2.0 * value - doubled) > 2.0 * tol:
            raise SymplecticIndexError(
                ErrorCode.RESIDUAL, f"{value!r} is not within {tol:g} of a half-integer"
            )
        return cls(doubled)

    @classmethod
    def of(cls, value: Number) -> "HalfInteger":
        if isinstance(value, HalfInteger):
            return value
        if isinstance(value, int):
            return cls(2 * value)
        return cls.from_float(float(value))

    def as_rational(self) -> sympy.Rational:
        return sympy.Rational(self._twice, 2)

    @property
    def is_integer(self) -> bool:
        return self._twice % 2 == 0

    def __add__(self, other: Number) -> "HalfInteger":
        return HalfInteger(self._twice + HalfInteger.of(other)._twice)

    __radd__ = __add__

    def __sub__(self, other: Number) -> "HalfInteger":
        return HalfInteger(self._twice - HalfInteger.of(other)._twice)

    def __rsub__(self, other: Number) -> "HalfInteger":
        return HalfInteger(HalfInteger.of(other)._twice - self._twice)

    def __neg__(self) -> "HalfInteger":
        return HalfInteger(-self._twice)

    def __mul__(self, factor: int) -> "HalfInteger":
        if not isinstance(factor, int):
            return NotImplemented
        return HalfInteger(self._twice * factor)

    __rmul__ = __mul__

    def __float__(self) -> float:
        return self._twice / 2.0

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, HalfInteger):
            return self._twice == other._twice
        if isinstance(other, (int, float)):
            return 2 * other == self._twice
        return NotImplemented

    def __lt__(self, other: Number) -> bool:
        return self._twice < HalfInteger.of(other)._twice

    def __hash__(self) -> int:
        return hash(("HalfInteger", self._twice))

    def __str__(self) -> str:
        if self.is_integer:
            return str(self._twice // 2)
        return f"{self._twice}/2"

    def __repr__(self) -> str:
        return f"HalfInteger({self})"
