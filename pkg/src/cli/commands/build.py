"""Build index command."""

import logging
from pathlib import Path
from typing import Optional

import click

from src.calculators.grid_transform import to_grid
from src.cli.error_handlers import with_error_handling
from src.cli.utils.formatters import (
    format_bytes,
    format_info,
    format_key_values,
    format_success,
)
from src.cli.utils.progress import ProgressTracker
from src.config.settings import get_config
from src.index.builder import build_index
from src.readers.las_reader import read_las_file
from src.utils.logging_utils import LogContext, generate_run_id

logger = logging.getLogger(__name__)

STAGES = ["Reading LAS file", "Converting to grid", "Building index", "Writing index"]


@click.command(name="build")
@click.argument("las_path", type=click.Path(dir_okay=False, path_type=Path))
@click.argument("index_path", type=click.Path(dir_okay=False, path_type=Path))
@click.option(
    "-k",
    "k",
    type=click.IntRange(min=2),
    default=None,
    help="Children per axis at every node (default: K3LIDAR_K or 2)",
)
@click.option(
    "-l",
    "l",  # noqa: E741
    type=click.IntRange(min=1),
    default=None,
    help="Most points a leaf may hold (default: K3LIDAR_L or 100)",
)
@click.option("--quiet", is_flag=True, help="Only print the final summary")
@click.option("--debug", is_flag=True, help="Show full stack traces on errors")
def build(
    las_path: Path,
    index_path: Path,
    k: Optional[int],
    l: Optional[int],  # noqa: E741
    quiet: bool,
    debug: bool,
):
    """Build a compressed index from a point format 0 LAS file.

    Example:
        k3lidar build survey.las survey.k3l
        k3lidar build survey.las survey.k3l -k 2 -l 50
    """
    with with_error_handling(debug):
        settings = get_config()
        k = settings.k if k is None else k
        l = settings.l if l is None else l  # noqa: E741
        tracker = ProgressTracker(STAGES, quiet=quiet)

        with LogContext(run_id=generate_run_id(), operation="build"):
            if not quiet:
                click.echo(format_info(f"Indexing {las_path} with k={k}, l={l}"))

            with tracker.stage():
                dataset = read_las_file(las_path)
            with tracker.stage():
                points, transform = to_grid(dataset.points, dataset.header)
            with tracker.stage():
                index = build_index(points, k=k, l=l, transform=transform)
            with tracker.stage():
                size = index.write(index_path)

        stats = index.stats()
        las_size = las_path.stat().st_size
        rows = [
            ("Points", f"{index.point_count:,}"),
            ("Levels (cube side)", f"{index.config.levels} ({index.config.n})"),
            ("Index size", format_bytes(size)),
            ("LAS file size", format_bytes(las_size)),
            ("Bits per point", f"{stats.bits_per_point:.2f}"),
            ("Elapsed", f"{tracker.total_seconds:.2f}s"),
        ]
        click.echo(format_key_values(rows))
        click.echo(format_success(f"Wrote {index_path}"))
        logger.info(
            f"Built index of {index.point_count} points "
            f"({stats.bits_per_point:.2f} bits/point) in {tracker.total_seconds:.2f}s"
        )
