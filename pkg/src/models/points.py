"""Columnar point sets.

Bulk point data moves between modules as a pandas DataFrame with the fixed
column order ``x, y, z`` followed by the attributes in catalogue order. This
is also the CSV column order used by the CLI.
"""

from typing import List, Tuple

import numpy as np
import pandas as pd

from src.models.attributes import ATTRIBUTE_NAMES, ATTRIBUTES

COORDINATE_COLUMNS: Tuple[str, ...] = ("x", "y", "z")
POINT_COLUMNS: Tuple[str, ...] = COORDINATE_COLUMNS + ATTRIBUTE_NAMES

DEFAULT_ATTRIBUTE_VALUES = {
    "return_number": 1,
    "number_of_returns": 1,
}


class PointDataError(ValueError):
    """Raised when a point frame is missing coordinates or holds bad values."""


def empty_points() -> pd.DataFrame:
    """A frame with no rows and the canonical columns and dtypes."""
    data = {name: np.zeros(0, dtype=np.int64) for name in COORDINATE_COLUMNS}
    for spec in ATTRIBUTES:
        data[spec.name] = np.zeros(0, dtype=spec.dtype)
    return pd.DataFrame(data, columns=list(POINT_COLUMNS))


def normalize_points(frame: pd.DataFrame) -> pd.DataFrame:
    """Return a copy with canonical columns, dtypes and a fresh index.

    Missing attribute columns are filled with their defaults (1 for the
    return fields, 0 otherwise). Extra columns are dropped.

    Raises:
        PointDataError: If a coordinate column is missing, a value is not an
            integer, or an attribute falls outside its declared range
    """
    missing = [c for c in COORDINATE_COLUMNS if c not in frame.columns]
    if missing:
        raise PointDataError(f"Point data is missing coordinate columns: {missing}")

    size = len(frame)
    data = {}
    for name in COORDINATE_COLUMNS:
        data[name] = _integer_column(frame[name], name)

    for spec in ATTRIBUTES:
        if spec.name in frame.columns:
            values = _integer_column(frame[spec.name], spec.name)
            out_of_range = size and (
                values.min() < spec.min_value or values.max() > spec.max_value
            )
            if out_of_range:
                bad = values[(values < spec.min_value) | (values > spec.max_value)][0]
                raise PointDataError(
                    f"Attribute {spec.name} value {bad} outside declared range "
                    f"[{spec.min_value}, {spec.max_value}]"
                )
        else:
            values = np.full(size, DEFAULT_ATTRIBUTE_VALUES.get(spec.name, 0))
        data[spec.name] = values.astype(spec.dtype)

    return pd.DataFrame(data, columns=list(POINT_COLUMNS))


def _integer_column(series: pd.Series, name: str) -> np.ndarray:
    values = series.to_numpy()
    if values.size == 0:
        return np.zeros(0, dtype=np.int64)
    if values.dtype.kind == "f":
        if not np.all(np.isfinite(values)) or np.any(values != np.round(values)):
            raise PointDataError(f"Column {name} must hold integer values")
    elif values.dtype.kind not in "iub":
        raise PointDataError(f"Column {name} must hold integer values")
    return values.astype(np.int64)


def frame_rows(frame: pd.DataFrame) -> List[Tuple[int, ...]]:
    """Rows of a point frame as plain int tuples in canonical column order."""
    if len(frame) == 0:
        return []
    columns = [frame[name].to_numpy().astype(np.int64) for name in POINT_COLUMNS]
    return list(zip(*(c.tolist() for c in columns)))


def canonical_rows(frame: pd.DataFrame) -> List[Tuple[int, ...]]:
    """Sorted rows, for comparing point frames as multisets."""
    return sorted(frame_rows(frame))
