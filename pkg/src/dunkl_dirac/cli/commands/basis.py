"""Export the Dunkl monogenic bases."""

from rich.console import Console

from dunkl_dirac.cli import options
from dunkl_dirac.cli.utils import build_config
from dunkl_dirac.export import Artifact, export_artifacts

console = Console()


def basis(
    dimensions: list[int] | None = options.DIMENSIONS,
    k_max: int | None = options.K_MAX,
    mu: str | None = options.MU,
    seed: int | None = options.SEED,
    out: str | None = options.OUT,
):
    """Write basis/n{n}_k{k}_s{blade}.txt for every degree and blade.

    Examples:
        dunkl-dirac basis --n 3 --k-max 2 --mu 1/2,1/3,1/4
    """
    config = build_config(dimensions, k_max, mu, seed, None, out, None)
    written = export_artifacts(config, [Artifact.BASIS])
    console.print(f"[green]Wrote {len(written)} basis files to {config.out_dir}[/green]")
