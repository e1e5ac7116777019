"""Main CLI application."""

import typer

from dunkl_dirac.cli.commands import basis, connection, ladder, verify
from dunkl_dirac.cli.utils import CONFIG_ERROR_EXIT, exit_with_error
from dunkl_dirac.logging import setup_logging
from dunkl_dirac.settings import get_settings

LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "WARNING", "ERROR")

app = typer.Typer(
    name="dunkl-dirac",
    help="Exact verification of the Dirac-Dunkl symmetry algebra and export of monogenic bases",
    no_args_is_help=True,
)


@app.callback()
def main_callback(
    log_level: str | None = typer.Option(
        None,
        "--log-level",
        help="Log level (TRACE, DEBUG, INFO, WARNING, ERROR); defaults to DUNKL_DIRAC_LOG_LEVEL",
    ),
):
    """Global options for all commands."""
    level = (log_level or get_settings().log_level).upper()
    if level not in LOG_LEVELS:
        exit_with_error(f"Invalid log level: {log_level}. Must be one of: {', '.join(LOG_LEVELS)}", CONFIG_ERROR_EXIT)
    setup_logging(level)


app.command(name="verify")(verify.verify)
app.command(name="basis")(basis.basis)
app.command(name="ladder")(ladder.ladder)
app.command(name="connection")(connection.connection)
