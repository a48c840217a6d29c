"""Validation report collecting the outcome of structural index checks."""

from dataclasses import dataclass
from enum import IntEnum
from typing import Any, Dict, List, Optional


class ValidationSeverity(IntEnum):
    """Severity levels for validation issues."""

    INFO = 1
    WARNING = 2
    ERROR = 3


_HEADINGS = {
    ValidationSeverity.ERROR: "ERRORS",
    ValidationSeverity.WARNING: "WARNINGS",
    ValidationSeverity.INFO: "INFO",
}


@dataclass
class ValidationIssue:
    """A single finding.

    Attributes:
        severity: The severity level of the issue
        check: Name of the check that produced it (e.g. "unary_groups")
        message: Human-readable description of the issue
        value: The offending quantity, if any
        context: Optional location details (e.g. T position, leaf ordinal)
    """

    severity: ValidationSeverity
    check: str
    message: str
    value: Any = None
    context: Optional[Dict[str, Any]] = None

    def __str__(self) -> str:
        context_str = ""
        if self.context:
            context_parts = [f"{k}={v}" for k, v in self.context.items()]
            context_str = f" ({', '.join(context_parts)})"
        return f"[{self.severity.name}] {self.check}: {self.message}{context_str}"


class ValidationReport:
    """Collects validation issues and formats them for display.

    Example:
        >>> report = ValidationReport()
        >>> report.add_error("unary_groups", "N has 3 groups, H has 4 ones", 3)
        >>> report.is_valid()
        False
    """

    def __init__(self) -> None:
        self.issues: List[ValidationIssue] = []
        self.checks_run: List[str] = []

    def _count(self, severity: ValidationSeverity) -> int:
        return sum(1 for issue in self.issues if issue.severity == severity)

    @property
    def error_count(self) -> int:
        return self._count(ValidationSeverity.ERROR)

    @property
    def warning_count(self) -> int:
        return self._count(ValidationSeverity.WARNING)

    @property
    def info_count(self) -> int:
        return self._count(ValidationSeverity.INFO)

    def is_valid(self) -> bool:
        """True when no error was recorded; warnings do not count."""
        return self.error_count == 0

    def has_errors(self) -> bool:
        return self.error_count > 0

    def add(
        self,
        severity: ValidationSeverity,
        check: str,
        message: str,
        value: Any = None,
        context: Optional[Dict[str, Any]] = None,
    ) -> None:
        """Record an issue.

        Args:
            severity: Issue severity
            check: Name of the check
            message: Human-readable description
            value: The offending quantity
            context: Optional location details
        """
        self.issues.append(ValidationIssue(severity, check, message, value, context))

    def add_error(self, check: str, message: str, value: Any = None, **context) -> None:
        self.add(ValidationSeverity.ERROR, check, message, value, context or None)

    def add_warning(
        self, check: str, message: str, value: Any = None, **context
    ) -> None:
        self.add(ValidationSeverity.WARNING, check, message, value, context or None)

    def add_info(self, check: str, message: str, value: Any = None, **context) -> None:
        self.add(ValidationSeverity.INFO, check, message, value, context or None)

    def mark_run(self, check: str) -> None:
        """Remember that a check ran, whether or not it found anything."""
        self.checks_run.append(check)

    def get_errors(self) -> List[ValidationIssue]:
        return [i for i in self.issues if i.severity == ValidationSeverity.ERROR]

    def get_warnings(self) -> List[ValidationIssue]:
        return [i for i in self.issues if i.severity == ValidationSeverity.WARNING]

    def merge(self, other: "ValidationReport") -> None:
        """Append the issues and checks of another report."""
        self.issues.extend(other.issues)
        self.checks_run.extend(other.checks_run)

    def summary(self) -> str:
        """Counts of errors, warnings and info messages."""
        parts = []
        if self.error_count > 0:
            parts.append(f"{self.error_count} error(s)")
        if self.warning_count > 0:
            parts.append(f"{self.warning_count} warning(s)")
        if self.info_count > 0:
            parts.append(f"{self.info_count} info message(s)")
        if not parts:
            return "No issues found"
        return ", ".join(parts)

    def format(self) -> str:
        """Multi-line report grouped by severity."""
        if not self.issues:
            return (
                f"Validation successful - {len(self.checks_run)} checks passed, "
                f"no issues found"
            )

        lines = [f"Validation Report - {self.summary()}", "=" * 60]
        for severity in sorted(ValidationSeverity, reverse=True):
            selected = [i for i in self.issues if i.severity == severity]
            if selected:
                lines.append(f"\n{_HEADINGS[severity]}:")
                lines.extend(f"  - {issue}" for issue in selected)
        return "\n".join(lines)
