"""Tests for the monogenic basis."""
