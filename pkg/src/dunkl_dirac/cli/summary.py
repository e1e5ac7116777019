"""Console summary of a verification report."""

from rich.console import Console
from rich.markup import escape
from rich.table import Table

from dunkl_dirac.verification import CheckStatus, VerificationReport

console = Console()

STATUS_STYLES = {
    CheckStatus.PASSED: "green",
    CheckStatus.FAILED: "red",
    CheckStatus.ERROR: "magenta",
    CheckStatus.SKIPPED: "yellow",
}


def suite_table(report: VerificationReport) -> Table:
    table = Table(title="Verification summary")
    table.add_column("suite")
    table.add_column("status")
    for column in ("checks", "passed", "failed", "errors", "skipped"):
        table.add_column(column, justify="right")
    for suite in report.suite_results:
        style = STATUS_STYLES.get(CheckStatus(suite.status), "white")
        table.add_row(
            suite.suite,
            f"[{style}]{suite.status}[/{style}]",
            str(suite.total_checks),
            str(suite.passed_checks),
            str(suite.failed_checks),
            str(suite.error_checks),
            str(suite.skipped_checks),
        )
    return table


def print_report(report: VerificationReport) -> None:
    """Print the per-suite table, then every failed or errored row with its witness."""
    console.print(suite_table(report))
    failures = [row for row in report.rows if row.is_failure]
    for row in failures:
        where = f"{row.realization}, n={row.parameters.n}, mu={','.join(row.parameters.mu)}"
        console.print(escape(f"  [{row.suite}] {row.name} ({where}): {row.message}"))
        if row.witness:
            witness = escape(f"witness {row.witness.basis_element}: lhs={row.witness.lhs} rhs={row.witness.rhs}")
            console.print(f"    [dim]{witness}[/dim]")

    if report.succeeded:
        console.print(f"[green]All {report.passed_checks} checks passed[/green]")
    else:
        console.print(f"[red]{report.failed_checks} failed, {report.error_checks} errored of {report.total_checks} checks[/red]")
