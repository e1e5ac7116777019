"""Tests for exact algebra."""
