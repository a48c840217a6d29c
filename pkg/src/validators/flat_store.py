"""Uncompressed reference store answering the same queries by linear scan.

Rows are plain int tuples in ``POINT_COLUMNS`` order. Results keep insertion
order; compare them with index results as multisets (sorted rows).
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

import pandas as pd

from src.models.attributes import ATTRIBUTE_NAMES, get_attribute
from src.models.index import QueryRegion
from src.models.las import PointRecord
from src.models.points import COORDINATE_COLUMNS, frame_rows

Row = Tuple[int, ...]


@dataclass
class FlatStore:
    """Points kept as a list of tuples in insertion order."""

    rows: List[Row] = field(default_factory=list)

    @classmethod
    def from_frame(cls, frame: pd.DataFrame) -> "FlatStore":
        return cls(rows=frame_rows(frame))

    def add(self, record: PointRecord) -> None:
        """Append one point; its coordinates must be grid values."""
        if min(record.x, record.y, record.z) < 0:
            raise ValueError(
                f"Coordinates must be non-negative: {(record.x, record.y, record.z)}"
            )
        self.rows.append(record.as_tuple())

    def __len__(self) -> int:
        return len(self.rows)


def scan_region(store: FlatStore, region: QueryRegion) -> List[Row]:
    """All rows inside the inclusive box (attribute filter ignored)."""
    (x_i, y_i, z_i), (x_e, y_e, z_e) = region.lower, region.upper
    return [
        row
        for row in store.rows
        if x_i <= row[0] <= x_e and y_i <= row[1] <= y_e and z_i <= row[2] <= z_e
    ]


def scan_filter(
    store: FlatStore,
    region: QueryRegion,
    attribute: Union[int, str],
    low: Optional[int] = None,
    high: Optional[int] = None,
) -> List[Row]:
    """Rows inside the box whose attribute lies in ``[low, high]``.

    Raises:
        UnknownAttributeError: If the attribute is not in the catalogue
    """
    spec = get_attribute(attribute)
    low = spec.min_value if low is None else low
    high = spec.max_value if high is None else high
    column = len(COORDINATE_COLUMNS) + ATTRIBUTE_NAMES.index(spec.name)
    return [row for row in scan_region(store, region) if low <= row[column] <= high]
