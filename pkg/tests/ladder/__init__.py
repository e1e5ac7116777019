"""Tests for the ladder operators."""
