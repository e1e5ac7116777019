"""Base abstraction for verification checks."""

from abc import ABC, abstractmethod
from typing import Any

from .models import CheckParameters, RelationCheck, Witness


class VerificationCheck(ABC):
    """Abstract base class for individual verification checks.

    Checks are pickled to worker processes when a suite runs with several
    jobs, so subclasses must hold only picklable state.
    """

    def __init__(self, name: str, realization: str = "clifford", parameters: CheckParameters | None = None):
        """Initialize the check.

        Args:
            name: Identity name reported in the result row
            realization: Realization tag of the row (``clifford`` or ``scalar``)
            parameters: Parameters echoed into the row, also on error
        """
        self.name = name
        self.realization = realization
        self.parameters = parameters or CheckParameters()

    @abstractmethod
    def _execute(self) -> RelationCheck:
        """Evaluate the identity and return its row."""

    def run(self) -> RelationCheck:
        return self._execute()

    def passed(self, message: str = "holds", details: dict[str, Any] | None = None) -> RelationCheck:
        return RelationCheck.passed(self.name, self.realization, self.parameters, message, details)

    def failed(self, message: str, witness: Witness, details: dict[str, Any] | None = None) -> RelationCheck:
        return RelationCheck.failed(self.name, self.realization, self.parameters, witness, message, details)

    def skipped(self, message: str, details: dict[str, Any] | None = None) -> RelationCheck:
        return RelationCheck.skipped(self.name, self.realization, self.parameters, message, details)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name='{self.name}', realization='{self.realization}')"
