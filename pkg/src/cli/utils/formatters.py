"""Output formatting utilities for CLI."""

import io
from typing import List, Sequence, Tuple

import click
import pandas as pd


def format_success(message: str) -> str:
    """Format a success message with green color."""
    return click.style(f"✓ {message}", fg="green", bold=True)


def format_error(message: str) -> str:
    """Format an error message with red color."""
    return click.style(f"✗ {message}", fg="red", bold=True)


def format_warning(message: str) -> str:
    """Format a warning message with yellow color."""
    return click.style(f"⚠ {message}", fg="yellow", bold=True)


def format_info(message: str) -> str:
    """Format an info message with blue color."""
    return click.style(f"ℹ {message}", fg="blue")


def format_bytes(size: int) -> str:
    """Human-readable byte count.

    Example:
        >>> format_bytes(1536)
        '1.5 KiB'
    """
    if size < 1024:
        return f"{size} B"
    value = size / 1024
    for unit in ("KiB", "MiB"):
        if value < 1024:
            return f"{value:.1f} {unit}"
        value /= 1024
    return f"{value:.1f} GiB"


def format_table(
    headers: Sequence[str],
    rows: Sequence[Sequence[object]],
    max_width: int = 80,
    numeric_right: bool = True,
) -> str:
    """Format data as a boxed table.

    Args:
        headers: Column headers
        rows: Data rows
        max_width: Maximum width for each column
        numeric_right: Right-align cells that look like numbers

    Returns:
        Formatted table as a string
    """
    if not headers:
        return ""

    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row[: len(widths)]):
            widths[i] = max(widths[i], len(str(cell)))
    widths = [min(w, max_width) for w in widths]

    def render(cells: Sequence[object]) -> str:
        parts = []
        for i, cell in enumerate(cells[: len(widths)]):
            text = str(cell)[: widths[i]]
            numeric = text.replace(",", "").replace(".", "", 1).lstrip("-").isdigit()
            if numeric_right and numeric:
                parts.append(f" {text:>{widths[i]}} ")
            else:
                parts.append(f" {text:<{widths[i]}} ")
        return "|" + "|".join(parts) + "|"

    separator = "+" + "+".join("-" * (w + 2) for w in widths) + "+"
    lines = [separator, render(headers), separator]
    if rows:
        lines.extend(render(row) for row in rows)
        lines.append(separator)
    return "\n".join(lines)


def format_key_values(rows: List[Tuple[str, str]]) -> str:
    """Two-column table of labelled figures."""
    return format_table(["Metric", "Value"], rows)


def format_points(frame: pd.DataFrame, output_format: str) -> str:
    """Render a point frame as aligned text or CSV.

    An empty frame renders as an empty string in text form and as a bare
    header line in CSV form.
    """
    if output_format == "csv":
        buffer = io.StringIO()
        frame.to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue()
    if len(frame) == 0:
        return ""
    return frame.to_string(index=False) + "\n"
