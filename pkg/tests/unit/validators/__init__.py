"""Unit tests for validators."""
