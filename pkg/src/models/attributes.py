"""Catalogue of the per-point attributes stored by the index.

The attributes are those of LAS Point Data Record Format 0. Each one has a
stable numeric id (used in the index file), a declared value range, and a
storage kind: one-bit attributes go to a plain bitmap, the rest to a DAC
sequence. Signed attributes are zigzag-mapped before DAC encoding.
"""

from enum import Enum
from typing import Dict, Tuple, Union

from pydantic import Field

from src.models.base import BaseDataModel


class AttributeKind(str, Enum):
    """How an attribute column is stored."""

    DAC = "dac"
    BITMAP = "bitmap"

    @property
    def code(self) -> int:
        """Numeric kind tag written to the index file."""
        return 0 if self is AttributeKind.DAC else 1


class UnknownAttributeError(KeyError):
    """Raised when an attribute id or name is not in the catalogue."""

    def __init__(self, key: Union[int, str]):
        self.key = key
        super().__init__(key)

    def __str__(self) -> str:
        return (
            f"Unknown attribute {self.key!r}. "
            f"Known attributes: {', '.join(ATTRIBUTE_NAMES)}"
        )


class AttributeSpec(BaseDataModel):
    """Declared shape of one point attribute."""

    attribute_id: int = Field(..., ge=0, le=255)
    name: str
    min_value: int
    max_value: int
    dtype: str = Field(..., description="numpy dtype used in point frames")
    kind: AttributeKind = AttributeKind.DAC

    @property
    def signed(self) -> bool:
        return self.min_value < 0

    def contains(self, value: int) -> bool:
        return self.min_value <= value <= self.max_value


ATTRIBUTES: Tuple[AttributeSpec, ...] = (
    AttributeSpec(
        attribute_id=0, name="intensity", min_value=0, max_value=65535, dtype="uint16"
    ),
    AttributeSpec(
        attribute_id=1, name="return_number", min_value=0, max_value=7, dtype="uint8"
    ),
    AttributeSpec(
        attribute_id=2,
        name="number_of_returns",
        min_value=0,
        max_value=7,
        dtype="uint8",
    ),
    AttributeSpec(
        attribute_id=3,
        name="scan_direction_flag",
        min_value=0,
        max_value=1,
        dtype="uint8",
        kind=AttributeKind.BITMAP,
    ),
    AttributeSpec(
        attribute_id=4,
        name="edge_of_flight_line",
        min_value=0,
        max_value=1,
        dtype="uint8",
        kind=AttributeKind.BITMAP,
    ),
    AttributeSpec(
        attribute_id=5, name="classification", min_value=0, max_value=255, dtype="uint8"
    ),
    AttributeSpec(
        attribute_id=6,
        name="scan_angle_rank",
        min_value=-128,
        max_value=127,
        dtype="int8",
    ),
    AttributeSpec(
        attribute_id=7, name="user_data", min_value=0, max_value=255, dtype="uint8"
    ),
    AttributeSpec(
        attribute_id=8,
        name="point_source_id",
        min_value=0,
        max_value=65535,
        dtype="uint16",
    ),
)

ATTRIBUTE_NAMES: Tuple[str, ...] = tuple(spec.name for spec in ATTRIBUTES)

_BY_NAME: Dict[str, AttributeSpec] = {spec.name: spec for spec in ATTRIBUTES}
_BY_ID: Dict[int, AttributeSpec] = {spec.attribute_id: spec for spec in ATTRIBUTES}


def get_attribute(key: Union[int, str]) -> AttributeSpec:
    """Look up an attribute by id or name.

    Args:
        key: Numeric id or attribute name (case-insensitive, '-' allowed)

    Returns:
        The attribute specification

    Raises:
        UnknownAttributeError: If no attribute matches
    """
    if isinstance(key, bool):
        raise UnknownAttributeError(key)
    if isinstance(key, int):
        if key in _BY_ID:
            return _BY_ID[key]
        raise UnknownAttributeError(key)
    normalized = str(key).strip().lower().replace("-", "_")
    if normalized in _BY_NAME:
        return _BY_NAME[normalized]
    raise UnknownAttributeError(key)
