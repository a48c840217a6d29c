"""Unit tests for writers module."""
