"""Parsing of region and attribute-filter options."""

from typing import Optional, Tuple

from pydantic import ValidationError

from src.calculators.grid_transform import GridTransform
from src.cli.error_handlers import RegionError
from src.models.attributes import UnknownAttributeError, get_attribute
from src.models.index import QueryRegion

REGION_HINT = "Use --region x1:y1:z1:x2:y2:z2 with the lower corner first"
ATTRIBUTE_HINT = "Use --attr NAME:LO:HI, e.g. --attr intensity:10:20"


def _split(text: str, parts: int, hint: str) -> Tuple[str, ...]:
    fields = tuple(field.strip() for field in text.split(":"))
    if len(fields) != parts or not all(fields):
        raise RegionError(f"Expected {parts} ':'-separated values, got {text!r}", hint)
    return fields


def parse_region(
    text: Optional[str], n: int, transform: Optional[GridTransform] = None
) -> QueryRegion:
    """Build a query box from ``x1:y1:z1:x2:y2:z2``.

    Without ``text`` the whole cube is returned. With ``transform`` the
    values are real-world coordinates and are converted to the grid box
    covering them.

    Raises:
        RegionError: On malformed values or a lower corner above the upper one
    """
    if text is None:
        return QueryRegion.full(n)

    fields = _split(text, 6, REGION_HINT)
    try:
        if transform is None:
            values = [int(v) for v in fields]
            lower, upper = tuple(values[:3]), tuple(values[3:])
        else:
            reals = [float(v) for v in fields]
            lower, upper = transform.real_to_grid_bounds(
                (reals[0], reals[1], reals[2]), (reals[3], reals[4], reals[5])
            )
    except ValueError as e:
        raise RegionError(f"Invalid region {text!r}: {e}", REGION_HINT) from e

    try:
        return QueryRegion(lower=lower, upper=upper)  # type: ignore[arg-type]
    except ValidationError as e:
        message = e.errors()[0]["msg"]
        raise RegionError(f"Invalid region {text!r}: {message}", REGION_HINT) from e


def parse_attribute_filter(text: str) -> Tuple[str, int, int]:
    """Split ``NAME:LO:HI`` into a catalogue name and inclusive bounds.

    Example:
        >>> parse_attribute_filter("intensity:10:20")
        ('intensity', 10, 20)
    """
    name, low_text, high_text = _split(text, 3, ATTRIBUTE_HINT)
    try:
        spec = get_attribute(name)
    except UnknownAttributeError as e:
        raise RegionError(str(e), ATTRIBUTE_HINT) from e
    try:
        low, high = int(low_text), int(high_text)
    except ValueError as e:
        raise RegionError(f"Invalid attribute range {text!r}", ATTRIBUTE_HINT) from e
    if low > high:
        raise RegionError(f"Attribute range is empty: {low} > {high}", ATTRIBUTE_HINT)
    return spec.name, low, high
