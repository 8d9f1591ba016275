"""Exception hierarchy for index computations."""

from enum import Enum
from typing import Optional


class ErrorCode(str, Enum):
    """Machine-readable failure codes."""

    DIMENSION_MISMATCH = "dimension_mismatch"
    NOT_SYMPLECTIC = "not_symplectic"
    NOT_ANTI_SYMPLECTIC = "not_anti_symplectic"
    NOT_INVOLUTION = "not_involution"
    NOT_LAGRANGIAN = "not_lagrangian"
    DEGENERATE = "degenerate"
    IRREGULAR_CROSSING = "irregular_crossing"
    UNRESOLVED = "unresolved"
    OUT_OF_RANGE = "out_of_range"
    EMPTY_INTERSECTION = "empty_intersection"
    DEGENERATE_ENDPOINT = "degenerate_endpoint"
    TRANSVERSALITY = "transversality"
    NONDEGENERACY = "nondegeneracy"
    UNKNOWN_CLASS = "unknown_class"
    MISMATCH = "mismatch"
    PARSE = "parse"
    ASYMMETRIC_FORM = "asymmetric_form"
    RESIDUAL = "residual"


# CLI exit codes
EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_DEGENERACY = 2
EXIT_VERIFICATION_FAILURE = 3

_DEGENERACY_CODES = {
    ErrorCode.DEGENERATE,
    ErrorCode.IRREGULAR_CROSSING,
    ErrorCode.UNRESOLVED,
    ErrorCode.DEGENERATE_ENDPOINT,
    ErrorCode.NONDEGENERACY,
    ErrorCode.TRANSVERSALITY,
}

_VERIFICATION_CODES = {
    ErrorCode.MISMATCH,
    ErrorCode.ASYMMETRIC_FORM,
    ErrorCode.RESIDUAL,
}


class SymplecticIndexError(Exception):
    """Base error carrying an :class:`ErrorCode`."""

    def __init__(self, code: ErrorCode, message: str):
        super().__init__(message)
        self.code = code
        self.message = message

    @property
    def exit_code(self) -> int:
        """Exit status the CLI reports for this error."""
        if self.code in _DEGENERACY_CODES:
            return EXIT_DEGENERACY
        if self.code in _VERIFICATION_CODES:
            return EXIT_VERIFICATION_FAILURE
        return EXIT_INPUT_ERROR

    def __str__(self) -> str:
        return f"[{self.code.value}] {self.message}"


class LinearAlgebraError(SymplecticIndexError):
    """Invalid symplectic linear algebra input."""


class CrossingError(SymplecticIndexError):
    """Crossing detection or crossing form failure."""

    def __init__(self, code: ErrorCode, message: str, time: Optional[float] = None):
        super().__init__(code, message)
        self.time = time


class NondegeneracyError(SymplecticIndexError):
    """A nondegeneracy precondition of an index identity failed."""

    def __init__(self, condition: str, message: str):
        super().__init__(ErrorCode.NONDEGENERACY, message)
        self.condition = condition


class NovikovError(SymplecticIndexError):
    """Novikov-ring arithmetic or lookup failure."""


class InputError(SymplecticIndexError):
    """Malformed input file or element text."""

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(ErrorCode.PARSE, message)
        self.field = field
