"""Exact-arithmetic suites: the non-monotonicity witness and the Seidel pushforward."""

from typing import List

import sympy

from ...models.report import MonotonicityVerdict, VerificationStatus
from ..novikov import (
    SEIDEL_EXPECTED,
    monotonicity_witness,
    parse_element,
    tau,
    verify_seidel_pushforward,
)
from .base import FixedCaseSuite, TrialContext, TrialOutcome


class MonotonicitySuite(FixedCaseSuite):
    """(0100) - (1000) has c₁ = 0 and area λ - 1 for every sampled λ."""

    name = "monotonicity"

    def cases(self) -> List[str]:
        return list(self.novikov.sample_lambdas)

    def run_trial(self, index: int, context: TrialContext) -> TrialOutcome:
        lam = sympy.Rational(self.cases()[index])
        report = monotonicity_witness(lam)
        checks = {
            "chern_zero": report.chern == 0,
            "area": sympy.Rational(report.area) == lam - 1,
            "verdict": report.verdict is MonotonicityVerdict.NOT_MONOTONE,
        }
        outcome = TrialOutcome.compare(checks, {"chern": report.chern})
        if outcome.status is VerificationStatus.PASS:
            outcome.detail = f"λ = {report.lam}, area = {report.area}"
        return outcome


class SeidelPushforwardSuite(FixedCaseSuite):
    """The golden pushforward with its split loops, and τ∘τ = id on the image."""

    name = "seidel_pushforward"

    def cases(self) -> List[str]:
        return ["golden", "tau_involution"]

    def run_trial(self, index: int, context: TrialContext) -> TrialOutcome:
        if self.cases()[index] == "golden":
            report = verify_seidel_pushforward()
            failed = sorted(text for text, ok in report.split_checks.items() if not ok)
            detail = None
            if report.status is not VerificationStatus.PASS:
                detail = f"missing {report.missing}, unexpected {report.unexpected}, split {failed}"
            return TrialOutcome(report.status, {"terms": len(report.missing) + len(report.unexpected)}, detail)

        image = parse_element(SEIDEL_EXPECTED)
        return TrialOutcome.compare({"tau_involution": tau(tau(image)) == image}, {})
