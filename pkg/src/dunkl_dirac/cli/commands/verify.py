"""Run the verification suites."""

import typer
from rich.console import Console

from dunkl_dirac.cli import options
from dunkl_dirac.cli.summary import print_report
from dunkl_dirac.cli.utils import build_config
from dunkl_dirac.constants import ALL_SUITES
from dunkl_dirac.runner import run_suite, write_report

console = Console()


def verify(
    dimensions: list[int] | None = options.DIMENSIONS,
    k_max: int | None = options.K_MAX,
    mu: str | None = options.MU,
    seed: int | None = options.SEED,
    suites: list[str] | None = typer.Option(None, "--suite", help=f"Suite to run (repeatable): {', '.join(ALL_SUITES)}"),
    realization: str | None = options.REALIZATION,
    out: str | None = options.OUT,
    jobs: int | None = options.JOBS,
    inject_sign_flip: bool = typer.Option(False, "--inject-sign-flip", hidden=True),
):
    """Verify the operator identities and write report.json and timings.json.

    Exits with code 0 only if no check failed or raised.

    Examples:
        dunkl-dirac verify --n 3
        dunkl-dirac verify --n 3 --n 4 --suite osp --suite bi-relations --jobs 4
        dunkl-dirac verify --n 3 --mu 1/2,1/3,1/4 --k-max 2
    """
    config = build_config(dimensions, k_max, mu, seed, realization, out, jobs, suites, inject_sign_flip)
    console.print(f"[bold]Verifying {', '.join(config.suites)} for n={config.dimensions}...[/bold]\n")

    report = run_suite(config)
    report_path, _ = write_report(report, config.out_dir)
    print_report(report)
    console.print(f"[dim]Report: {report_path}[/dim]")

    if not report.succeeded:
        raise typer.Exit(1)
