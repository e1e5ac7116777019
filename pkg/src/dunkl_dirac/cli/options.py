"""Options shared by every subcommand."""

import typer

DIMENSIONS = typer.Option(None, "--n", help="Dimension n >= 3 (repeatable); defaults to DUNKL_DIRAC_DIMENSIONS")
K_MAX = typer.Option(None, "--k-max", help="Highest test degree; overrides the per-dimension defaults")
MU = typer.Option(None, "--mu", help="Dunkl parameters, e.g. 1/2,1/3,1/4, or random:SEED")
SEED = typer.Option(None, "--seed", help="Seed for sampled parameters; shorthand for --mu random:SEED")
REALIZATION = typer.Option(None, "--realization", help="clifford, scalar or both")
OUT = typer.Option(None, "--out", help="Output directory")
JOBS = typer.Option(None, "--jobs", help="Worker processes per suite")
