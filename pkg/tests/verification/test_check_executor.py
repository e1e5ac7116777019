"""Tests for CheckExecutor."""

from dunkl_dirac.exceptions import InexactDivisionError
from dunkl_dirac.verification import CheckParameters, CheckStatus, RelationCheck, VerificationCheck, Witness
from dunkl_dirac.verification.check_executor import CheckExecutor, run_check


class MockCheck(VerificationCheck):
    """Mock identity check for testing."""

    def __init__(self, name: str, should_fail: bool = False, error: Exception | None = None):
        super().__init__(name, parameters=CheckParameters(n=4, k_max=2))
        self.should_fail = should_fail
        self.error = error
        self.execute_called = False

    def _execute(self) -> RelationCheck:
        self.execute_called = True
        if self.error is not None:
            raise self.error
        if self.should_fail:
            return self.failed(f"Check {self.name} failed", Witness(basis_element="1", lhs="1/1", rhs="-1/1"))
        return self.passed(f"Check {self.name} passed")


class TestCheckExecutor:
    def test_execute_successful_check(self):
        """The row is stamped with the suite, a timestamp and a duration."""
        executor = CheckExecutor()
        check = MockCheck("test_check")

        row = executor.execute_single_check(check, "osp")

        assert row.status == CheckStatus.PASSED
        assert row.name == "test_check"
        assert row.suite == "osp"
        assert row.message == "Check test_check passed"
        assert row.execution_time_ms is not None
        assert row.execution_time_ms >= 0
        assert row.executed_at is not None
        assert check.execute_called is True

    def test_execute_failing_check(self):
        """A failed check keeps its witness."""
        row = CheckExecutor().execute_single_check(MockCheck("failing_check", should_fail=True), "casimirs")

        assert row.status == CheckStatus.FAILED
        assert row.suite == "casimirs"
        assert row.witness.rhs == "-1/1"

    def test_execute_check_with_exception(self):
        """Exceptions become error rows that keep the check parameters."""
        check = MockCheck("error_check", error=ValueError("bad subset"))

        row = CheckExecutor().execute_single_check(check, "bi-relations")

        assert row.status == CheckStatus.ERROR
        assert row.name == "error_check"
        assert row.suite == "bi-relations"
        assert "bad subset" in row.message
        assert row.details == {"exception": "bad subset", "type": "ValueError"}
        assert row.parameters == CheckParameters(n=4, k_max=2)
        assert row.witness is None

    def test_arithmetic_errors_are_recovered(self):
        """Inexact division becomes an error row."""
        check = MockCheck("division", error=InexactDivisionError(1, (0, 1, 0)))

        row = CheckExecutor().execute_single_check(check, "osp")

        assert row.status == CheckStatus.ERROR
        assert row.details["type"] == "InexactDivisionError"

    def test_lookup_errors_are_recovered(self):
        """A missing key inside a check becomes an error row."""
        check = MockCheck("lookup", error=KeyError("missing"))

        row = CheckExecutor().execute_single_check(check, "monogenics")

        assert row.status == CheckStatus.ERROR
        assert row.suite == "monogenics"
        assert row.details["type"] == "KeyError"
        assert "missing" in row.message

    def test_index_errors_are_recovered(self):
        """An out-of-range index inside a check becomes an error row."""
        row = CheckExecutor().execute_single_check(MockCheck("index", error=IndexError("label 9")), "ladder")

        assert row.status == CheckStatus.ERROR
        assert row.details == {"exception": "label 9", "type": "IndexError"}

    def test_run_check_entry_point(self):
        """The module-level helper runs a check in a fresh executor."""
        row = run_check(MockCheck("entry"), "ladder")

        assert row.status == CheckStatus.PASSED
        assert row.suite == "ladder"
