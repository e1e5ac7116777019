"""Command-line interface for dunkl-dirac.

Runs the verification suites and writes the basis, ladder and connection exports.
"""

from dunkl_dirac.cli.app import app

__all__ = ["app"]
