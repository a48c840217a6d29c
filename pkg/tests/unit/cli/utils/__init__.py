"""Unit tests for CLI utilities."""
