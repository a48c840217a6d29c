"""k3-lidar CLI.

This module provides a command-line interface for building compressed
point-cloud indexes from LAS files, querying them, reporting their size and
exporting them back to LAS.
"""

from typing import Optional

import click
from pydantic import ValidationError

from src.cli.commands.build import build
from src.cli.commands.export import export
from src.cli.commands.query import query
from src.cli.commands.stats import stats
from src.cli.commands.validate import validate
from src.cli.error_handlers import ConfigurationError, with_error_handling
from src.config.logging_config import LoggingConfig, configure_logging
from src.config.settings import get_config, reload_config

__version__ = "1.0.0"

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


@click.group(help="k3-lidar CLI - Compressed LiDAR point clouds with region queries")
@click.version_option(version=__version__)
@click.option(
    "--log-level",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default=None,
    help="Override LOG_LEVEL for this run",
)
@click.option(
    "--env-file",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="Read settings from this .env file",
)
def cli(log_level: Optional[str], env_file: Optional[str]):
    """k3-lidar CLI main entry point."""
    with with_error_handling():
        try:
            settings = reload_config(env_file) if env_file else get_config()
        except ValidationError as e:
            raise ConfigurationError(
                f"Invalid settings: {e.errors()[0]['msg']}",
                "Check the K3LIDAR_* and LOG_* variables in your environment",
            ) from e
        configure_logging(LoggingConfig.from_settings(settings, level=log_level))


cli.add_command(build)
cli.add_command(query)
cli.add_command(stats)
cli.add_command(export)
cli.add_command(validate)


def main():
    """Main entry point for the CLI."""
    cli()


if __name__ == "__main__":
    main()
