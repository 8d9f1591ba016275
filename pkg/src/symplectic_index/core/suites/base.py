"""Abstract verification suite interface."""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ...models.config import NovikovConfig, NumericsConfig
from ...models.report import VerificationStatus
from ..maslov import SymplecticPathSpec, generic_generator, perturb


@dataclass
class TrialOutcome:
    """Result of one trial before it is stamped with suite and seed."""

    status: VerificationStatus
    values: Dict[str, Optional[int]] = field(default_factory=dict)
    detail: Optional[str] = None

    @classmethod
    def compare(cls, checks: Dict[str, bool], values: Dict[str, Optional[int]]) -> "TrialOutcome":
        """PASS when every named check holds; otherwise FAIL naming the broken ones."""
        broken = [name for name, ok in checks.items() if not ok]
        if broken:
            return cls(VerificationStatus.FAIL, values, "failed: " + ", ".join(broken))
        return cls(VerificationStatus.PASS, values)


@dataclass
class TrialContext:
    """Everything a trial may draw from."""

    rng: np.random.Generator
    numerics: NumericsConfig
    n: Optional[int] = None
    perturbed: bool = False

    def adjust(self, spec: SymplecticPathSpec) -> SymplecticPathSpec:
        """Apply the retry perturbation to a freshly drawn path, when retrying."""
        if not self.perturbed:
            return spec
        return perturb(spec, self.numerics.perturbation_eps, generic_generator(spec.space))


class VerificationSuite(ABC):
    """A named family of trials checking one group of identities."""

    name: str = ""
    # one sub-suite per dimension, labelled name[n]
    per_dimension: bool = False
    # used when the configuration leaves trials or dims unset
    default_trials: int = 50
    default_dims: Tuple[int, ...] = (1, 2)

    def __init__(self, numerics: NumericsConfig, novikov: NovikovConfig):
        """
        Initialize suite.

        Args:
            numerics: Tolerances and scan resolution
            novikov: Exact-arithmetic settings
        """
        self.numerics = numerics
        self.novikov = novikov

    def label(self, n: Optional[int]) -> str:
        return f"{self.name}[{n}]" if n is not None else self.name

    def dimensions(self, dims: Optional[Sequence[int]] = None) -> List[Optional[int]]:
        """Sub-suite dimensions: the configured ``dims``, else the suite's own."""
        if not self.per_dimension:
            return [None]
        return list(dims) if dims else list(self.default_dims)

    def trial_count(self, trials: Optional[int] = None) -> int:
        """Number of trials for a configured ``trials``; None means the suite default."""
        return self.default_trials if trials is None else trials

    @abstractmethod
    def run_trial(self, index: int, context: TrialContext) -> TrialOutcome:
        """
        Run one trial.

        Args:
            index: Trial number within the (sub-)suite
            context: Seeded generator, numerics and dimension

        Returns:
            Trial outcome; index-engine errors propagate to the runner
        """


class FixedCaseSuite(VerificationSuite):
    """A suite of deterministic cases; one trial per case, none when trials = 0."""

    @abstractmethod
    def cases(self) -> List[str]:
        """Case identifiers in run order."""

    def trial_count(self, trials: Optional[int] = None) -> int:
        return 0 if trials == 0 else len(self.cases())
