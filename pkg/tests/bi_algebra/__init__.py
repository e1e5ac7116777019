"""Tests for the Bannai-Ito algebra of the Gamma operators."""
