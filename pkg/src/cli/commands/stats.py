"""Index statistics command."""

import json
from pathlib import Path

import click

from src.cli.error_handlers import with_error_handling
from src.cli.utils.formatters import format_key_values
from src.index.k3lidar import K3LidarIndex


@click.command(name="stats")
@click.argument("index_path", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--json", "as_json", is_flag=True, help="Print the figures as JSON")
@click.option("--debug", is_flag=True, help="Show full stack traces on errors")
def stats(index_path: Path, as_json: bool, debug: bool):
    """Show sizes and shape of an index.

    Example:
        k3lidar stats survey.k3l
        k3lidar stats survey.k3l --json
    """
    with with_error_handling(debug):
        figures = K3LidarIndex.read(index_path).stats()
        if as_json:
            click.echo(json.dumps(figures.model_dump(), indent=2))
        else:
            click.echo(format_key_values(figures.as_rows()))
