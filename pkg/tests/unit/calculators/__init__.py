"""Unit tests for calculator modules."""
