"""Unit tests for CLI error handling."""

import click
import pytest

from src.cli.error_handlers import (
    CLIError,
    ConfigurationError,
    DataValidationError,
    IndexFileError,
    InputFileError,
    ProcessingError,
    RegionError,
    as_cli_error,
    handle_cli_error,
    with_error_handling,
)
from src.index.builder import BuildError
from src.index.serializer import IndexFormatError
from src.models.attributes import UnknownAttributeError
from src.models.points import PointDataError
from src.readers.las_reader import LasFormatError


class TestAsCliError:
    """Test suite for mapping library exceptions."""

    @pytest.mark.parametrize(
        "error,expected,code",
        [
            (LasFormatError("bad header"), InputFileError, 2),
            (IndexFormatError("bad magic"), IndexFileError, 3),
            (UnknownAttributeError("colour"), RegionError, 4),
            (BuildError("outside the cube"), ProcessingError, 5),
            (PointDataError("intensity out of range"), ProcessingError, 5),
        ],
    )
    def test_library_errors(self, error, expected, code):
        """Test each library error gets its CLI class and a hint."""
        cli_error = as_cli_error(error)
        assert isinstance(cli_error, expected)
        assert cli_error.exit_code == code
        assert cli_error.message == str(error)
        assert cli_error.recovery_hint

    def test_cli_error_passes_through(self):
        """Test CLI errors are returned unchanged."""
        error = ConfigurationError("bad")
        assert as_cli_error(error) is error

    def test_unknown_error(self):
        """Test anything else is not mapped."""
        assert as_cli_error(RuntimeError("boom")) is None


class TestHandleCliError:
    """Test suite for exit codes and messages."""

    @pytest.mark.parametrize(
        "error,code",
        [
            (ConfigurationError("x"), 1),
            (InputFileError("x"), 2),
            (IndexFileError("x"), 3),
            (RegionError("x"), 4),
            (ProcessingError("x"), 5),
            (DataValidationError("x"), 6),
            (FileNotFoundError(2, "No such file", "a.las"), 7),
            (click.Abort(), 130),
            (RuntimeError("x"), 255),
            (CLIError("x"), 255),
        ],
    )
    def test_exit_codes(self, error, code):
        """Test every error class ends with its own exit code."""
        assert handle_cli_error(error) == code

    def test_message_and_hint(self, capsys):
        """Test the label, message and hint go to standard error."""
        handle_cli_error(RegionError("Invalid region", "Use x1:y1:z1:x2:y2:z2"))
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "Region Error: Invalid region" in captured.err
        assert "Hint: Use x1:y1:z1:x2:y2:z2" in captured.err

    def test_unexpected_error_suggests_debug(self, capsys):
        """Test unexpected errors point at --debug."""
        handle_cli_error(RuntimeError("boom"))
        err = capsys.readouterr().err
        assert "Unexpected Error: RuntimeError" in err
        assert "--debug" in err

    def test_debug_prints_trace(self, capsys):
        """Test debug mode prints the stack trace."""
        try:
            raise RuntimeError("boom")
        except RuntimeError as e:
            handle_cli_error(e, debug=True)
        assert "Traceback" in capsys.readouterr().err


class TestWithErrorHandling:
    """Test suite for the command context manager."""

    def test_exits_with_code(self):
        """Test an exception becomes SystemExit with the mapped code."""
        with pytest.raises(SystemExit) as exc_info:
            with with_error_handling():
                raise IndexFormatError("truncated")
        assert exc_info.value.code == 3

    def test_no_error(self):
        """Test a clean block runs through."""
        with with_error_handling():
            value = 1
        assert value == 1

    def test_system_exit_untouched(self):
        """Test SystemExit raised inside the block is not remapped."""
        with pytest.raises(SystemExit) as exc_info:
            with with_error_handling():
                raise SystemExit(0)
        assert exc_info.value.code == 0
