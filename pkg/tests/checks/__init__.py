"""Tests for dunkl_dirac.checks."""
