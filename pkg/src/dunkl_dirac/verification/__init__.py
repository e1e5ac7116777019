"""Verification pipeline: suites of identity checks producing one report.

- Stages group the checks of a suite and may run them on a process pool
- Every check yields a ``RelationCheck`` row; exceptions become ``error`` rows
- The pipeline aggregates the rows into a ``VerificationReport``

The runtime knows nothing about the mathematics; the checks live in
``dunkl_dirac.checks``.
"""

from .base import VerificationCheck
from .builder import VerificationPipelineBuilder
from .enums import CheckStatus, RunOutcome
from .models import CheckParameters, RelationCheck, SuiteResult, VerificationReport, Witness
from .pipeline import VerificationPipeline
from .stage import SuiteStage

__all__ = [
    "CheckParameters",
    "CheckStatus",
    "RelationCheck",
    "RunOutcome",
    "SuiteResult",
    "SuiteStage",
    "VerificationCheck",
    "VerificationPipeline",
    "VerificationPipelineBuilder",
    "VerificationReport",
    "Witness",
]
