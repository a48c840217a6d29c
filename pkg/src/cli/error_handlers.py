"""Error handling for CLI commands.

Every failure ends in a distinct exit code so scripts can tell a bad LAS
file from a bad index file or a malformed region:

    1  configuration          5  build / processing
    2  LAS input              6  index failed validation
    3  index file             7  file system
    4  region or attribute    130 cancelled, 255 unexpected
"""

import sys
import traceback
from typing import Optional, Tuple, Type

import click

from src.cli.utils.formatters import format_error, format_warning
from src.index.builder import BuildError
from src.index.serializer import IndexFormatError
from src.models.attributes import UnknownAttributeError
from src.models.points import PointDataError
from src.readers.las_reader import LasFormatError


class CLIError(Exception):
    """Base exception for CLI errors with user-friendly messages."""

    exit_code = 255
    label = "Error"

    def __init__(self, message: str, recovery_hint: Optional[str] = None):
        """
        Initialize CLI error.

        Args:
            message: Error message to display
            recovery_hint: Optional hint for recovering from the error
        """
        self.message = message
        self.recovery_hint = recovery_hint
        super().__init__(message)


class ConfigurationError(CLIError):
    """Invalid settings or environment."""

    exit_code = 1
    label = "Configuration Error"


class InputFileError(CLIError):
    """The LAS input could not be read."""

    exit_code = 2
    label = "Input Error"


class IndexFileError(CLIError):
    """The index file could not be read."""

    exit_code = 3
    label = "Index File Error"


class RegionError(CLIError):
    """Malformed region or attribute filter."""

    exit_code = 4
    label = "Region Error"


class ProcessingError(CLIError):
    """Index construction or output failed."""

    exit_code = 5
    label = "Processing Error"


class DataValidationError(CLIError):
    """The index violates a structural invariant."""

    exit_code = 6
    label = "Validation Error"


# Library exceptions surfaced with a hint instead of a stack trace
_LIBRARY_ERRORS: Tuple[Tuple[Type[Exception], Type[CLIError], str], ...] = (
    (
        LasFormatError,
        InputFileError,
        "Only uncompressed LAS 1.0-1.4 files with point format 0 are supported",
    ),
    (
        IndexFormatError,
        IndexFileError,
        "Rebuild the index with 'k3lidar build'",
    ),
    (
        UnknownAttributeError,
        RegionError,
        "Run 'k3lidar query --help' for the attribute names",
    ),
    (
        BuildError,
        ProcessingError,
        "Check that the input coordinates fit the configured cube",
    ),
    (
        PointDataError,
        ProcessingError,
        "Point attributes must be integers within their LAS ranges",
    ),
)


def as_cli_error(error: Exception) -> Optional[CLIError]:
    """Wrap a known library exception; None for anything else."""
    if isinstance(error, CLIError):
        return error
    for source, target, hint in _LIBRARY_ERRORS:
        if isinstance(error, source):
            return target(str(error), hint)
    return None


def _echo(message: str) -> None:
    click.echo(message, err=True)


def handle_cli_error(error: Exception, debug: bool = False) -> int:
    """
    Report an error on standard error and pick the exit code.

    Args:
        error: The exception that occurred
        debug: Whether to show full stack trace

    Returns:
        Exit code (see module docstring)
    """
    cli_error = as_cli_error(error)
    if cli_error is not None:
        _echo(format_error(f"{cli_error.label}: {cli_error.message}"))
        if cli_error.recovery_hint:
            _echo(format_warning(f"Hint: {cli_error.recovery_hint}"))
        if debug:
            _echo(traceback.format_exc())
        return cli_error.exit_code

    if isinstance(error, click.Abort):
        _echo(format_warning("\nOperation cancelled by user"))
        return 130

    if isinstance(error, OSError):
        _echo(format_error(f"File Error: {error}"))
        _echo(format_warning("Hint: Check the path and its permissions"))
        return 7

    _echo(format_error(f"Unexpected Error: {type(error).__name__}"))
    _echo(str(error))
    if debug:
        _echo("\nFull stack trace:")
        _echo(traceback.format_exc())
    else:
        _echo(format_warning("\nRun with --debug flag for full stack trace"))
    return 255


def with_error_handling(debug: bool = False):
    """
    Context manager adding standardized error handling to a command.

    Args:
        debug: Whether to show full stack traces

    Example:
        @click.command()
        @click.option('--debug', is_flag=True)
        def my_command(debug):
            with with_error_handling(debug):
                ...
    """

    class ErrorHandler:
        """Turns exceptions into an exit code."""

        def __init__(self, show_debug: bool):
            self.show_debug = show_debug

        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc_val, exc_tb):
            if exc_val is not None and not isinstance(exc_val, SystemExit):
                exit_code = handle_cli_error(exc_val, self.show_debug)
                sys.exit(exit_code)
            return False

    return ErrorHandler(debug)
