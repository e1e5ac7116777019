"""CLI utility functions shared across commands.

This module contains:
- Turning command options into a validated ``RunConfig``
- Console error output with the right exit code
"""

from typing import NoReturn

import typer
from rich.console import Console

from dunkl_dirac.exceptions import InvalidConfigError
from dunkl_dirac.run_config import RunConfig
from dunkl_dirac.sampling import RANDOM_PREFIX

console = Console()

# Exit status for an unusable configuration (same as a click usage error)
CONFIG_ERROR_EXIT = 2


def exit_with_error(message: str, code: int = 1) -> NoReturn:
    """Print ``message`` in red and exit with ``code``.

    Raises:
        typer.Exit: Always
    """
    console.print(f"[red]Error: {message}[/red]")
    raise typer.Exit(code)


def resolve_mu(mu: str | None, seed: int | None) -> str | None:
    """Combine ``--mu`` and ``--seed`` into one parameter string.

    ``--seed S`` alone means ``random:S``; together with an explicit list it is
    rejected.

    Raises:
        InvalidConfigError: If both an explicit list and a seed are given
    """
    if seed is None:
        return mu
    if mu is not None and not mu.startswith(RANDOM_PREFIX):
        raise InvalidConfigError("seed", seed, "--seed only applies to sampled parameters, not to an explicit --mu list")
    return f"{RANDOM_PREFIX}{seed}"


def build_config(
    dimensions: list[int] | None,
    k_max: int | None,
    mu: str | None,
    seed: int | None,
    realization: str | None,
    out_dir: str | None,
    jobs: int | None,
    suites: list[str] | None = None,
    inject_sign_flip: bool = False,
) -> RunConfig:
    """Settings defaults overlaid with the given options.

    Raises:
        typer.Exit: With code 2 if the configuration is invalid
    """
    try:
        return RunConfig.from_settings(
            dimensions=dimensions or None,
            k_max=k_max,
            mu=resolve_mu(mu, seed),
            realization=realization,
            out_dir=out_dir,
            jobs=jobs,
            suites=suites or None,
            inject_sign_flip=inject_sign_flip,
        )
    except InvalidConfigError as e:
        exit_with_error(str(e), CONFIG_ERROR_EXIT)
