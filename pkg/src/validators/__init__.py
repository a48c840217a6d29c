"""Structural index checks and the linear-scan reference store."""

from src.validators.flat_store import FlatStore, scan_filter, scan_region
from src.validators.index_validator import IndexValidator
from src.validators.validation_report import (
    ValidationIssue,
    ValidationReport,
    ValidationSeverity,
)

__all__ = [
    "FlatStore",
    "IndexValidator",
    "ValidationIssue",
    "ValidationReport",
    "ValidationSeverity",
    "scan_filter",
    "scan_region",
]
