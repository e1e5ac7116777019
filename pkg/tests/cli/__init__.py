"""Tests for the dunkl-dirac CLI."""
