"""Exact Dirac-Dunkl operator calculus over Z_2^n."""

from .settings import Settings, get_settings  # noqa: F401

__all__ = ["get_settings", "Settings"]
