"""Seeded execution of verification suites."""

import logging
import zlib
from typing import Callable, Dict, List, Optional, Tuple, Type

import numpy as np

from ...models.config import Config
from ...models.report import SuiteReport, SuiteSummary, TrialRecord, VerificationStatus
from ..errors import EXIT_DEGENERACY, CrossingError, ErrorCode, SymplecticIndexError
from .base import TrialContext, TrialOutcome, VerificationSuite
from .doubling import DiagonalSuite, IndexTheoremSuite, ReflectionSuite
from .hormander import HormanderSuite
from .maslov import MaslovPropertySuite, RotationOracleSuite
from .novikov import MonotonicitySuite, SeidelPushforwardSuite


logger = logging.getLogger(__name__)

SUITES: Dict[str, Type[VerificationSuite]] = {
    suite.name: suite
    for suite in (
        RotationOracleSuite,
        MaslovPropertySuite,
        IndexTheoremSuite,
        ReflectionSuite,
        DiagonalSuite,
        HormanderSuite,
        MonotonicitySuite,
        SeidelPushforwardSuite,
    )
}

ProgressCallback = Callable[[str, int, int], None]


def trial_generator(seed: int, label: str, trial: int) -> np.random.Generator:
    """Generator for one trial: SeedSequence([seed, crc32(label), trial])."""
    suite_key = zlib.crc32(label.encode("utf-8"))
    return np.random.default_rng(np.random.SeedSequence([seed, suite_key, trial]))


class SuiteRunner:
    """Runs the configured suites in a fixed order and collects trial records."""

    def __init__(self, config: Config):
        """
        Initialize suite runner.

        Args:
            config: Full configuration; the suite and numerics sections are used
        """
        self.config = config
        self.suites = [
            SUITES[name](config.numerics, config.novikov) for name in SUITES if name in config.suite.suites
        ]

    def run(self, progress: Optional[ProgressCallback] = None) -> SuiteReport:
        """
        Run every selected suite.

        Args:
            progress: Called as ``progress(label, done, total)`` after each trial

        Returns:
            Report with one summary per (sub-)suite and every trial record
        """
        settings = self.config.suite
        report = SuiteReport(
            seed=settings.seed,
            trials=settings.trials,
            tol=self.config.numerics.tol,
            grid=self.config.numerics.grid,
        )
        for suite in self.suites:
            for n in suite.dimensions(settings.dims):
                summary, records = self.run_suite(suite, n, progress)
                report.summaries.append(summary)
                report.records.extend(records)
        logger.info(f"Suites finished with {report.failures} failure(s)")
        return report

    def plan(self) -> List[Tuple[str, int]]:
        """(label, trial count) of every (sub-)suite, in run order."""
        settings = self.config.suite
        return [
            (suite.label(n), suite.trial_count(settings.trials))
            for suite in self.suites
            for n in suite.dimensions(settings.dims)
        ]

    def run_suite(
        self,
        suite: VerificationSuite,
        n: Optional[int] = None,
        progress: Optional[ProgressCallback] = None,
    ) -> Tuple[SuiteSummary, List[TrialRecord]]:
        """Run all trials of one (sub-)suite and apply the skip budget."""
        settings = self.config.suite
        label = suite.label(n)
        total = suite.trial_count(settings.trials)
        summary = SuiteSummary(name=label)
        records: List[TrialRecord] = []

        if total == 0:
            summary.warnings.append("0 trials")
            logger.warning(f"{label}: 0 trials, passing vacuously")

        for trial in range(total):
            record = self.run_trial(suite, label, n, trial)
            records.append(record)
            if record.status is VerificationStatus.PASS:
                summary.passed += 1
            elif record.status is VerificationStatus.SKIP:
                summary.skipped += 1
            else:
                summary.failed += 1
                logger.warning(f"{label} trial {trial} failed: {record.detail}")
            if progress is not None:
                progress(label, trial + 1, total)

        if summary.trials and summary.skip_fraction >= settings.skip_budget:
            summary.over_budget = True
            summary.warnings.append(
                f"{summary.skipped}/{summary.trials} trials skipped, budget {settings.skip_budget:g}"
            )
            logger.warning(f"{label}: skip fraction {summary.skip_fraction:.2f} exceeds the budget")
        return summary, records

    def run_trial(self, suite: VerificationSuite, label: str, n: Optional[int], trial: int) -> TrialRecord:
        """
        Run one trial, retrying once with a perturbed path on an irregular crossing.

        The retry replays the same generator so it sees the same random draws.
        """
        seed = self.config.suite.seed
        perturbed = False
        try:
            outcome = self._attempt(suite, n, trial, label, perturbed=False)
        except CrossingError as e:
            if e.code is not ErrorCode.IRREGULAR_CROSSING:
                outcome = self._from_error(e)
            else:
                logger.info(f"{label} trial {trial}: {e}; retrying with a perturbed path")
                perturbed = True
                try:
                    outcome = self._attempt(suite, n, trial, label, perturbed=True)
                except SymplecticIndexError as retry_error:
                    outcome = self._from_error(retry_error)
        except SymplecticIndexError as e:
            outcome = self._from_error(e)

        return TrialRecord(
            suite=label,
            trial=trial,
            seed=seed,
            n=n,
            status=outcome.status,
            values=outcome.values,
            perturbed=perturbed,
            detail=outcome.detail,
        )

    def _attempt(
        self, suite: VerificationSuite, n: Optional[int], trial: int, label: str, perturbed: bool
    ) -> TrialOutcome:
        context = TrialContext(
            rng=trial_generator(self.config.suite.seed, label, trial),
            numerics=self.config.numerics,
            n=n,
            perturbed=perturbed,
        )
        return suite.run_trial(trial, context)

    def _from_error(self, error: SymplecticIndexError) -> TrialOutcome:
        # degenerate draws are skipped; anything else is a failure
        if error.exit_code == EXIT_DEGENERACY:
            logger.info(f"Skipping degenerate trial: {error}")
            return TrialOutcome(VerificationStatus.SKIP, detail=f"degenerate: {error.code.value}")
        return TrialOutcome(VerificationStatus.FAIL, detail=str(error))
