"""Text syntax for Novikov elements.

Canonical form::

    [(01)+(10)]e^{1/2*(10)+h*[(10)-(01)]}
    -(1110)e^{-1/2*(0001)}

Terms sharing an exponent are grouped in brackets. The parser also accepts
the typeset variants ``½``, ``−``, juxtaposition without ``*`` and
combining overlines on class digits.
"""

from collections import defaultdict
from typing import Dict, List, Optional, Tuple

import sympy

from ..errors import InputError
from .lattice import Lattice
from .ring import ClassSymbol, Exponent, NovikovElement


_REPLACEMENTS = {
    "\u00bd": "1/2",
    "\u2212": "-",
    "\u2013": "-",
    "\u0304": "",
    "\u0305": "",
    "\u00b7": "*",
}


def _normalize(text: str) -> str:
    for old, new in _REPLACEMENTS.items():
        text = text.replace(old, new)
    return "".join(text.split())


class _Parser:
    def __init__(self, text: str):
        self.text = _normalize(text)
        self.pos = 0

    def error(self, expected: str) -> InputError:
        found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
        return InputError(f"expected {expected} at position {self.pos}, found {found!r}", field="element")

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, token: str) -> bool:
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.accept(token):
            raise self.error(repr(token))

    def sign(self) -> int:
        if self.accept("-"):
            return -1
        self.accept("+")
        return 1

    def rational(self) -> Optional[sympy.Rational]:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == start:
            return None
        numerator = int(self.text[start:self.pos])
        if self.accept("/"):
            digits = self.pos
            while self.peek().isdigit():
                self.pos += 1
            if self.pos == digits:
                raise self.error("denominator")
            return sympy.Rational(numerator, int(self.text[digits:self.pos]))
        return sympy.Integer(numerator)

    def symbol(self) -> ClassSymbol:
        self.expect("(")
        start = self.pos
        while self.peek() in ("0", "1"):
            self.pos += 1
        digits = self.text[start:self.pos]
        if len(digits) not in (2, 4):
            raise self.error("a class label of 2 or 4 binary digits")
        self.expect(")")
        return ClassSymbol(digits)

    def coefficient(self) -> sympy.Rational:
        value = self.rational()
        if value is None:
            return sympy.Integer(1)
        self.accept("*")
        return value

    # -- class combinations ----------------------------------------------

    def combination(self) -> List[Tuple[ClassSymbol, sympy.Rational]]:
        """A signed sum of class labels, bracketed or single."""
        if self.accept("["):
            items = [self._signed_symbol(first=True)]
            while self.peek() in ("+", "-"):
                items.append(self._signed_symbol(first=False))
            self.expect("]")
            return items
        symbol = self.symbol()
        return [(symbol, sympy.Integer(1))]

    def _signed_symbol(self, first: bool) -> Tuple[ClassSymbol, sympy.Rational]:
        if not first and self.peek() not in ("+", "-"):
            raise self.error("'+' or '-'")
        sign = self.sign()
        value = self.coefficient()
        return self.symbol(), sign * value

    # -- exponents -------------------------------------------------------

    def exponent(self, lattice: Lattice) -> Exponent:
        const: Dict[int, sympy.Rational] = defaultdict(lambda: sympy.Integer(0))
        h_part: Dict[int, sympy.Rational] = defaultdict(lambda: sympy.Integer(0))
        first = True
        while self.peek() != "}":
            if not first and self.peek() not in ("+", "-"):
                raise self.error("'+', '-' or '}'")
            first = False
            sign = self.sign()
            value = sign * self.coefficient()
            target = const
            if self.accept("h"):
                self.accept("*")
                target = h_part
            for symbol, weight in self.combination():
                if symbol.lattice is not lattice:
                    raise self.error(f"a class of lattice {lattice.value}")
                index = symbol.digits.index("1") if symbol.digits.count("1") == 1 else -1
                if index < 0:
                    raise self.error("a basis class in the exponent")
                target[index] += value * weight
        rank = lattice.rank
        return Exponent(lattice, tuple(const[i] for i in range(rank)), tuple(h_part[i] for i in range(rank)))

    # -- elements --------------------------------------------------------

    def group(self, first: bool) -> List[Tuple[ClassSymbol, Exponent, int]]:
        if not first and self.peek() not in ("+", "-"):
            raise self.error("'+' or '-'")
        sign = self.sign()
        value = self.coefficient()
        start = self.pos
        items = self.combination()
        lattice = items[0][0].lattice
        if any(symbol.lattice is not lattice for symbol, _ in items):
            self.pos = start
            raise self.error("class labels of a single lattice")
        exponent = Exponent.zero(lattice)
        if self.accept("e^{"):
            exponent = self.exponent(lattice)
            self.expect("}")
        terms = []
        for symbol, weight in items:
            coefficient = sign * value * weight
            if not coefficient.is_integer:
                raise self.error("integer coefficients on class symbols")
            terms.append((symbol, exponent, int(coefficient)))
        return terms

    def element(self) -> NovikovElement:
        terms: List[Tuple[ClassSymbol, Exponent, int]] = []
        first = True
        while self.pos < len(self.text):
            terms.extend(self.group(first))
            first = False
        return NovikovElement(tuple(terms))


def parse_element(text: str) -> NovikovElement:
    """
    Parse a Novikov element.

    Raises:
        InputError: PARSE, with the character position in the message
    """
    return _Parser(text).element()


def _format_rational(value: sympy.Rational) -> str:
    return str(abs(value))


def _format_combination(items: List[Tuple[str, sympy.Rational]], positive_first: bool) -> str:
    if positive_first:
        items = sorted(items, key=lambda item: (bool(item[1] < 0), item[0]))
    parts = []
    for label, value in items:
        sign = "-" if value < 0 else "+"
        magnitude = "" if abs(value) == 1 else f"{_format_rational(value)}*"
        parts.append(f"{sign}{magnitude}{label}")
    return "".join(parts).lstrip("+")


def _format_exponent(exponent: Exponent) -> str:
    labels = [f"({exponent.lattice.basis_label(i)})" for i in range(exponent.lattice.rank)]
    const = [(labels[i], c) for i, c in enumerate(exponent.const) if c != 0]
    h_part = [(labels[i], c) for i, c in enumerate(exponent.h) if c != 0]
    text = _format_combination(const, positive_first=True)
    if h_part:
        if len(h_part) == 1:
            label, value = h_part[0]
            magnitude = "" if abs(value) == 1 else f"{_format_rational(value)}*"
            piece = f"{'-' if value < 0 else '+'}{magnitude}h*{label}"
        else:
            piece = f"+h*[{_format_combination(h_part, positive_first=True)}]"
        text = (text + piece) if text else piece.lstrip("+")
    return text


def format_element(element: NovikovElement) -> str:
    """Canonical text; the zero element is the empty string."""
    groups: Dict[Exponent, List[Tuple[str, sympy.Rational]]] = {}
    for symbol, exponent, coefficient in element.terms:
        groups.setdefault(exponent, []).append((str(symbol), sympy.Integer(coefficient)))

    pieces = []
    for exponent, items in groups.items():
        suffix = "" if exponent.is_zero else f"e^{{{_format_exponent(exponent)}}}"
        if len(items) == 1:
            label, value = items[0]
            magnitude = "" if abs(value) == 1 else f"{abs(value)}*"
            body = f"{'-' if value < 0 else '+'}{magnitude}{label}"
        else:
            body = f"+[{_format_combination(items, positive_first=False)}]"
        pieces.append(body + suffix)
    return "".join(pieces).lstrip("+")
