"""Unit tests for reader modules."""
