"""A verification check that runs one ``verify_*`` operation."""

from collections.abc import Callable
from typing import Any

from dunkl_dirac.verification import CheckParameters, RelationCheck, VerificationCheck

Operation = Callable[..., RelationCheck]


class OperationCheck(VerificationCheck):
    """Wraps a module-level ``verify_*`` function and its arguments.

    The function and its arguments must be picklable; realizations pickle as
    their (kind, parameters) key and are rebuilt in the worker.
    """

    def __init__(
        self,
        name: str,
        operation: Operation,
        *args: Any,
        realization: str = "clifford",
        parameters: CheckParameters | None = None,
    ):
        """Initialize the check.

        Args:
            name: Identity name, used for logging and for ``error`` rows
            operation: The ``verify_*`` function
            *args: Positional arguments passed to ``operation``
            realization: Realization tag of the row
            parameters: Parameters echoed into ``error`` rows
        """
        super().__init__(name, realization, parameters)
        self.operation = operation
        self.args = args

    def _execute(self) -> RelationCheck:
        return self.operation(*self.args)

    def __repr__(self) -> str:
        return f"OperationCheck(name='{self.name}', operation={self.operation.__name__}, realization='{self.realization}')"
