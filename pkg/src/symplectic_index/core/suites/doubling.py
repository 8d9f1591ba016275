"""Randomized suites for the doubling index formula, reflection and the diagonal."""

from typing import Dict, Optional

from ...models.report import DefectReport, VerificationStatus
from ..doubling import (
    HalfPathData,
    random_half_path,
    verify_diagonal,
    verify_index_theorem,
    verify_reflection,
)
from ..maslov import random_path
from ..symlin import SympSpace
from .base import TrialContext, TrialOutcome, VerificationSuite


_VALUE_FIELDS = ("mu_plus_twice", "mu_minus_twice", "mu_loop_twice", "q_signature", "defect_twice")


def outcome_from_report(report: DefectReport, extra: Optional[Dict[str, Optional[int]]] = None) -> TrialOutcome:
    """Translate a defect report into a trial outcome."""
    values = {name: getattr(report, name) for name in _VALUE_FIELDS}
    values.update(extra or {})
    if report.status is VerificationStatus.SKIP:
        return TrialOutcome(report.status, values, f"degenerate: {report.skipped_condition}")
    detail = None
    if report.status is VerificationStatus.FAIL:
        detail = f"defect {report.defect}" if report.defect_twice else "identity failed"
    return TrialOutcome(report.status, values, detail)


class _HalfPathSuite(VerificationSuite):
    per_dimension = True

    def draw(self, context: TrialContext) -> HalfPathData:
        space = SympSpace.standard(context.n or 1)
        return HalfPathData(context.adjust(random_half_path(space, context.rng)))


class IndexTheoremSuite(_HalfPathSuite):
    """μ₊ + μ₋ - μ_loop = ½·sign Q on random half-paths."""

    name = "index_theorem"
    default_dims = (1, 2, 3)

    def run_trial(self, index: int, context: TrialContext) -> TrialOutcome:
        report = verify_index_theorem(
            self.draw(context),
            tol=self.numerics.tol,
            grid=self.numerics.grid,
            margin=self.numerics.nondegeneracy_margin,
        )
        return outcome_from_report(report)


class ReflectionSuite(_HalfPathSuite):
    """A half-path and its reflection have equal Lagrangian indices."""

    name = "reflection"
    default_trials = 100

    def run_trial(self, index: int, context: TrialContext) -> TrialOutcome:
        report = verify_reflection(
            self.draw(context),
            tol=self.numerics.tol,
            grid=self.numerics.grid,
            margin=self.numerics.nondegeneracy_margin,
        )
        return outcome_from_report(report)


class DiagonalSuite(VerificationSuite):
    """Diagonal doubles of random paths φ on [0, 2]."""

    name = "diagonal"
    per_dimension = True

    def run_trial(self, index: int, context: TrialContext) -> TrialOutcome:
        space = SympSpace.standard(context.n or 1)
        phi = context.adjust(random_path(space, context.rng, total=2.0))
        report = verify_diagonal(
            phi,
            tol=self.numerics.tol,
            grid=self.numerics.grid,
            margin=self.numerics.nondegeneracy_margin,
        )
        return outcome_from_report(
            report,
            {"mu_half_twice": report.mu_half_twice, "factor_index_twice": report.factor_index_twice},
        )
