"""Tests for the verification pipeline."""
