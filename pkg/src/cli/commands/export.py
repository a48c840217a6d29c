"""Export index to LAS command."""

from pathlib import Path

import click

from src.cli.commands.query import write_points_las
from src.cli.error_handlers import with_error_handling
from src.cli.utils.formatters import format_bytes, format_success
from src.index.k3lidar import K3LidarIndex
from src.utils.logging_utils import LogContext, generate_run_id


@click.command(name="export")
@click.argument("index_path", type=click.Path(dir_okay=False, path_type=Path))
@click.argument("las_path", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--debug", is_flag=True, help="Show full stack traces on errors")
def export(index_path: Path, las_path: Path, debug: bool):
    """Decode every point of an index back into a LAS file.

    Coordinates are restored to the raw LAS integers of the original file,
    so building an index from the export reproduces the same index.

    Example:
        k3lidar export survey.k3l restored.las
    """
    with with_error_handling(debug):
        with LogContext(run_id=generate_run_id(), operation="export"):
            index = K3LidarIndex.read(index_path)
            frame = index.decode_all()
            size = write_points_las(index, frame, las_path)
        click.echo(
            format_success(
                f"Exported {len(frame):,} points to {las_path} ({format_bytes(size)})"
            )
        )
