"""Region query command."""

import logging
from pathlib import Path
from typing import Optional

import click
import pandas as pd

from src.cli.error_handlers import ConfigurationError, with_error_handling
from src.cli.utils.formatters import format_info, format_points
from src.cli.utils.parsing import parse_attribute_filter, parse_region
from src.config.settings import OUTPUT_FORMATS, get_config
from src.index.k3lidar import K3LidarIndex
from src.models.las import LasHeader
from src.utils.logging_utils import LogContext, generate_run_id, log_duration
from src.writers.las_writer import write_las_file

logger = logging.getLogger(__name__)


def write_points_las(index: K3LidarIndex, frame: pd.DataFrame, path: Path) -> int:
    """Write grid points of ``index`` as a LAS file with the index's scale."""
    raw = frame.copy()
    coords = index.transform.to_raw(frame[["x", "y", "z"]].to_numpy())
    for axis, name in enumerate(("x", "y", "z")):
        raw[name] = coords[:, axis]
    header = LasHeader(scale=index.config.las_scale, offset=index.config.las_offset)
    return write_las_file(path, header, raw)


@click.command(name="query")
@click.argument("index_path", type=click.Path(dir_okay=False, path_type=Path))
@click.option(
    "--region",
    "region_text",
    type=str,
    default=None,
    help="Inclusive box x1:y1:z1:x2:y2:z2 (default: whole cube)",
)
@click.option(
    "--attr",
    "attr_text",
    type=str,
    default=None,
    help="Keep points whose attribute lies in LO..HI, as NAME:LO:HI",
)
@click.option(
    "--real",
    is_flag=True,
    help="Region is in real-world coordinates; printed points are too",
)
@click.option(
    "--format",
    "output_format",
    type=click.Choice(OUTPUT_FORMATS, case_sensitive=False),
    default=None,
    help="Output format (default: K3LIDAR_OUTPUT_FORMAT or text)",
)
@click.option(
    "-o",
    "--output",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Write points to a file instead of standard output",
)
@click.option("--debug", is_flag=True, help="Show full stack traces on errors")
def query(
    index_path: Path,
    region_text: Optional[str],
    attr_text: Optional[str],
    real: bool,
    output_format: Optional[str],
    output: Optional[Path],
    debug: bool,
):
    """Print the points inside a box, optionally filtered by an attribute.

    Points go to standard output (or -o); the point count and elapsed time
    go to standard error.

    Example:
        k3lidar query survey.k3l --region 0:0:0:99:99:99
        k3lidar query survey.k3l --region 0:0:0:99:99:99 --attr intensity:10:20
        k3lidar query survey.k3l --format las -o subset.las
    """
    if output_format == "las" and output is None:
        raise click.UsageError("--format las needs -o PATH")

    with with_error_handling(debug):
        output_format = (output_format or get_config().output_format).lower()
        if output_format == "las" and output is None:
            raise ConfigurationError(
                "K3LIDAR_OUTPUT_FORMAT is las but no -o PATH was given",
                "Pass -o PATH or --format text",
            )

        attribute = parse_attribute_filter(attr_text) if attr_text else None
        with LogContext(run_id=generate_run_id(), operation="query"):
            index = K3LidarIndex.read(index_path)
            transform = index.transform if real else None
            region = parse_region(region_text, index.config.n, transform)

            with log_duration(logger, "Region query", logging.DEBUG) as timing:
                if attribute is None:
                    frame = index.get_region(region)
                else:
                    name, low, high = attribute
                    frame = index.filter_att_region(region, name, low, high)
            elapsed_ms = timing["seconds"] * 1000
            logger.info(f"Query returned {len(frame)} points in {elapsed_ms:.1f} ms")

        if output_format == "las":
            write_points_las(index, frame, output)  # type: ignore[arg-type]
        else:
            shown = index.to_real(frame) if real else frame
            text = format_points(shown, output_format)
            if output is None:
                click.echo(text, nl=False)
            else:
                output.write_text(text)

        click.echo(
            format_info(f"{len(frame)} points in {elapsed_ms:.1f} ms"), err=True
        )
