"""Data models package."""

from .config import (
    SUITE_NAMES,
    Config,
    NovikovConfig,
    NumericsConfig,
    OutputConfig,
    RunConfig,
    SuiteConfig,
)
from .report import (
    CrossingRecord,
    DefectReport,
    DiagonalReport,
    HormanderReport,
    IndexFlavor,
    IndexReport,
    MonotonicityReport,
    MonotonicityVerdict,
    PushforwardReport,
    SeidelReport,
    SuiteReport,
    SuiteSummary,
    TrialRecord,
    VerificationStatus,
)

__all__ = [
    # Report models
    "CrossingRecord",
    "DefectReport",
    "DiagonalReport",
    "HormanderReport",
    "IndexFlavor",
    "IndexReport",
    "MonotonicityReport",
    "MonotonicityVerdict",
    "PushforwardReport",
    "SeidelReport",
    "SuiteReport",
    "SuiteSummary",
    "TrialRecord",
    "VerificationStatus",

    # Configuration models
    "Config",
    "NovikovConfig",
    "NumericsConfig",
    "OutputConfig",
    "RunConfig",
    "SuiteConfig",
    "SUITE_NAMES",
]
