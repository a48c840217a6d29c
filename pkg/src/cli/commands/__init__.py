"""CLI commands."""

from src.cli.commands.build import build
from src.cli.commands.export import export
from src.cli.commands.query import query
from src.cli.commands.stats import stats
from src.cli.commands.validate import validate

__all__ = ["build", "export", "query", "stats", "validate"]
