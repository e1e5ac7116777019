"""Tests for operator expressions and realizations."""
