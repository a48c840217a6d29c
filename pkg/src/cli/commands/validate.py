"""Validate index command."""

from pathlib import Path

import click

from src.cli.error_handlers import DataValidationError, with_error_handling
from src.cli.utils.formatters import format_info, format_success
from src.index.k3lidar import K3LidarIndex
from src.validators.index_validator import IndexValidator


@click.command(name="validate")
@click.argument("index_path", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--debug", is_flag=True, help="Show full stack traces on errors")
def validate(index_path: Path, debug: bool):
    """Check the structural invariants of an index file.

    Returns exit code 6 if any check fails.

    Example:
        k3lidar validate survey.k3l
    """
    with with_error_handling(debug):
        click.echo(format_info(f"Validating {index_path}..."))
        index = K3LidarIndex.read(index_path)
        report = IndexValidator().validate(index)
        click.echo(report.format())

        if report.has_errors():
            raise DataValidationError(
                f"Index failed {report.error_count} check(s)",
                "Rebuild the index with 'k3lidar build'",
            )
        click.echo(format_success(f"{len(report.checks_run)} checks passed"))
