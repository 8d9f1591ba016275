"""Seeded verification suites for the index identities."""

from .base import FixedCaseSuite, TrialContext, TrialOutcome, VerificationSuite
from .runner import SUITES, SuiteRunner, trial_generator

__all__ = [
    "SUITES",
    "FixedCaseSuite",
    "SuiteRunner",
    "TrialContext",
    "TrialOutcome",
    "VerificationSuite",
    "trial_generator",
]
