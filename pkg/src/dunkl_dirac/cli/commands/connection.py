"""Export connection coefficients between the two monogenic bases."""

from rich.console import Console

from dunkl_dirac.cli import options
from dunkl_dirac.cli.utils import build_config
from dunkl_dirac.export import Artifact, export_artifacts

console = Console()


def connection(
    dimensions: list[int] | None = options.DIMENSIONS,
    k_max: int | None = options.K_MAX,
    mu: str | None = options.MU,
    seed: int | None = options.SEED,
    out: str | None = options.OUT,
):
    """Write connection/n{n}_k{k}_s{blade}.csv with raw overlaps and a _gram.csv sidecar.

    Examples:
        dunkl-dirac connection --n 3 --k-max 3 --mu 1/2,1/3,1/4
    """
    config = build_config(dimensions, k_max, mu, seed, None, out, None)
    written = export_artifacts(config, [Artifact.CONNECTION])
    console.print(f"[green]Wrote {len(written) // 2} connection tables to {config.out_dir}[/green]")
