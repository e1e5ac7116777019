"""Export the ladder action table."""

from rich.console import Console

from dunkl_dirac.cli import options
from dunkl_dirac.cli.utils import build_config
from dunkl_dirac.export import Artifact, export_artifacts

console = Console()


def ladder(
    dimensions: list[int] | None = options.DIMENSIONS,
    k_max: int | None = options.K_MAX,
    mu: str | None = options.MU,
    seed: int | None = options.SEED,
    out: str | None = options.OUT,
):
    """Write ladder_actions.csv: the coefficient of every K_l^(+-) on every basis monogenic.

    Examples:
        dunkl-dirac ladder --n 3 --n 4 --seed 7
    """
    config = build_config(dimensions, k_max, mu, seed, None, out, None)
    (path,) = export_artifacts(config, [Artifact.LADDER])
    console.print(f"[green]Wrote {path}[/green]")
