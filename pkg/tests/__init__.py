"""Test package for dunkl-dirac."""
