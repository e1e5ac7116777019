"""CLI entry point.

Usage:
    python -m dunkl_dirac.cli verify --n 3
    dunkl-dirac verify --n 3 --n 4 --suite osp
    dunkl-dirac basis --n 3 --k-max 2 --mu 1/2,1/3,1/4
"""

from loguru import logger

import dunkl_dirac
from dunkl_dirac.cli.app import app
from dunkl_dirac.logging import setup_logging


def _configure_cli_logging() -> None:
    """Compact ``level | message`` logging until the app callback applies the configured level."""
    setup_logging("INFO")
    logger.enable(dunkl_dirac.__name__)


def main() -> None:
    """CLI entry point with logging configuration."""
    _configure_cli_logging()
    app()


if __name__ == "__main__":
    main()
