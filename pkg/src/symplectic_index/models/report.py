"""Report models for index computations and verification runs."""

from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, computed_field, model_validator

from ..core.maslov.half_integer import HalfInteger


class IndexFlavor(str, Enum):
    """Which Conley-Zehnder convention an index follows."""

    LAGRANGIAN = "lagrangian"
    PERIODIC = "periodic"


class VerificationStatus(str, Enum):
    """Outcome of a single verification."""

    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


def _half(twice: Optional[int]) -> Optional[HalfInteger]:
    return None if twice is None else HalfInteger(twice)


class CrossingRecord(BaseModel):
    """Serializable summary of one crossing."""

    time: float = Field(..., description="Crossing time")
    kind: str = Field(..., description="start, end, interior or junction")
    dimension: int = Field(..., ge=1, description="Dimension of the intersection")
    signatures: List[int] = Field(..., description="Crossing form signature(s), left then right")
    weight_twice: int = Field(..., description="Contribution to twice the index")


class IndexReport(BaseModel):
    """A Maslov or Conley-Zehnder index with the crossings it is summed from."""

    value_twice: int = Field(..., description="Twice the index (exact)")
    crossings: List[CrossingRecord] = Field(default_factory=list, description="Crossings in time order")
    convention_tag: IndexFlavor = Field(..., description="Index flavor")
    duration: float = Field(..., gt=0, description="Length of the parameter interval")

    @model_validator(mode="after")
    def _value_matches_crossings(self) -> "IndexReport":
        total = sum(c.weight_twice for c in self.crossings)
        if total != self.value_twice:
            raise ValueError(f"value {self.value_twice}/2 does not match crossing sum {total}/2")
        return self

    @computed_field  # type: ignore[misc]
    @property
    def index(self) -> str:
        return str(self.value)

    @property
    def value(self) -> HalfInteger:
        return HalfInteger(self.value_twice)


class DefectReport(BaseModel):
    """Terms of the doubling index formula for one half-path."""

    mu_plus_twice: Optional[int] = Field(None, description="2·μ of the half-path")
    mu_minus_twice: Optional[int] = Field(None, description="2·μ of the reflected half")
    mu_loop_twice: Optional[int] = Field(None, description="2·μ of the doubled loop")
    q_signature: Optional[int] = Field(None, description="Signature of the defect form Q")
    defect_twice: Optional[int] = Field(None, description="2·(μ₊ + μ₋ - μ_loop - ½ sign Q)")
    status: VerificationStatus = Field(..., description="pass, fail or skip")
    skipped_condition: Optional[str] = Field(None, description="Failed nondegeneracy condition")
    q_asymmetry: Optional[float] = Field(None, description="‖B - Bᵀ‖ before symmetrization")

    @property
    def mu_plus(self) -> Optional[HalfInteger]:
        return _half(self.mu_plus_twice)

    @property
    def mu_minus(self) -> Optional[HalfInteger]:
        return _half(self.mu_minus_twice)

    @property
    def mu_loop(self) -> Optional[HalfInteger]:
        return _half(self.mu_loop_twice)

    @property
    def defect(self) -> Optional[HalfInteger]:
        return _half(self.defect_twice)

    @property
    def passed(self) -> bool:
        return self.status == VerificationStatus.PASS


class DiagonalReport(DefectReport):
    """Defect report of a diagonal double plus the diagonal-specific identities."""

    mu_half_twice: Optional[int] = Field(None, description="2·μ(Ψ(t)△, △) on [0, 1]")
    factor_index_twice: Optional[int] = Field(None, description="2·cz_periodic(φ) on [0, 2]")
    sign_q_zero: bool = Field(False, description="sign Q = 0 and Q is block anti-diagonal")
    loop_equals_twice_half: bool = Field(False, description="μ_loop = 2·μ_half")
    half_equals_factor_index: bool = Field(False, description="μ_half = cz_periodic(φ)")

    @property
    def all_identities_hold(self) -> bool:
        return self.sign_q_zero and self.loop_equals_twice_half and self.half_equals_factor_index


class HormanderReport(BaseModel):
    """Hörmander index, and the signature formula when it applies."""

    value_twice: int = Field(..., description="Twice s(A, B; C, D)")
    signature_twice: Optional[int] = Field(None, description="Twice ½·sign Q′, for triples")
    attempts: int = Field(1, ge=1, description="Auxiliary draws used")

    @computed_field  # type: ignore[misc]
    @property
    def index(self) -> str:
        return str(self.value)

    @property
    def value(self) -> HalfInteger:
        return HalfInteger(self.value_twice)


class TrialRecord(BaseModel):
    """One randomized trial of a verification suite."""

    suite: str = Field(..., description="Suite name")
    trial: int = Field(..., ge=0, description="Trial number within the suite")
    seed: int = Field(..., description="Master seed")
    n: Optional[int] = Field(None, description="Half-dimension of the space")
    status: VerificationStatus = Field(..., description="pass, fail or skip")
    values: Dict[str, Optional[int]] = Field(default_factory=dict, description="Doubled indices and signatures")
    perturbed: bool = Field(False, description="Retried after an irregular crossing")
    detail: Optional[str] = Field(None, description="Failure or skip reason")


class SuiteSummary(BaseModel):
    """Counts for one suite."""

    name: str
    passed: int = 0
    skipped: int = 0
    failed: int = 0
    warnings: List[str] = Field(default_factory=list)
    over_budget: bool = Field(False, description="Skip fraction reached the skip budget")

    @property
    def trials(self) -> int:
        return self.passed + self.skipped + self.failed

    @property
    def skip_fraction(self) -> float:
        return self.skipped / self.trials if self.trials else 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0 and not self.over_budget


class SuiteReport(BaseModel):
    """Result of a full suite run."""

    seed: int
    trials: Optional[int] = Field(None, description="Configured trials; None when each suite used its default")
    tol: float
    grid: int
    summaries: List[SuiteSummary] = Field(default_factory=list)
    records: List[TrialRecord] = Field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(s.failed for s in self.summaries)

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.summaries)


class MonotonicityVerdict(str, Enum):
    NOT_MONOTONE = "NOT_MONOTONE"
    NOT_A_WITNESS = "NOT_A_WITNESS"


class MonotonicityReport(BaseModel):
    """Chern number and area of a candidate witness class."""

    sphere_class: str = Field(..., description="Class in canonical notation")
    lattice: str = Field(..., description="X or M")
    lam: str = Field(..., description="Area ratio λ (exact)")
    chern: int = Field(..., description="First Chern number")
    area: str = Field(..., description="Symplectic area (exact rational)")
    verdict: MonotonicityVerdict


class SeidelReport(BaseModel):
    """Exact comparison of a pushed-forward Seidel element with its expected value."""

    source: str = Field(..., description="Element that was pushed forward")
    expected: str = Field(..., description="Expected image")
    actual: str = Field(..., description="Computed image")
    missing: List[str] = Field(default_factory=list, description="Expected terms absent from the image")
    unexpected: List[str] = Field(default_factory=list, description="Image terms not expected")
    split_checks: Dict[str, bool] = Field(default_factory=dict, description="Split-loop pushforwards")
    status: VerificationStatus = Field(..., description="pass or fail")

    @computed_field  # type: ignore[misc]
    @property
    def verdict(self) -> str:
        return "PASS" if self.status == VerificationStatus.PASS else "MISMATCH"


class PushforwardReport(BaseModel):
    """A Novikov element and its image under the doubling pushforward."""

    source: str = Field(..., description="Input element in canonical notation")
    image: str = Field(..., description="Pushed-forward element in canonical notation")
