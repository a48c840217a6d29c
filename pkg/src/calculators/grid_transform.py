"""Conversion between raw LAS integers, grid coordinates and real coordinates.

Grid coordinates start at ``<0,0,0>``: per axis the dataset minimum raw
integer is subtracted. Real coordinates are recovered as

    real = scale * (grid + grid_offset) + las_offset
"""

import logging
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np
import pandas as pd

from src.models.las import LasHeader
from src.models.points import COORDINATE_COLUMNS, normalize_points

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GridTransform:
    """Per-axis integer shift plus the LAS scale and offset.

    Attributes:
        grid_offset: Raw integer subtracted from every coordinate
        scale: LAS scale factors
        offset: LAS offsets
    """

    grid_offset: Tuple[int, int, int] = (0, 0, 0)
    scale: Tuple[float, float, float] = (1.0, 1.0, 1.0)
    offset: Tuple[float, float, float] = (0.0, 0.0, 0.0)

    def to_raw(self, grid: np.ndarray) -> np.ndarray:
        """Grid coordinates (m, 3) back to raw LAS integers."""
        shift = np.asarray(self.grid_offset, dtype=np.int64)
        return np.asarray(grid, dtype=np.int64) + shift

    def to_real(self, grid: np.ndarray) -> np.ndarray:
        """Grid coordinates (m, 3) to real-world coordinates."""
        raw = self.to_raw(grid).astype(np.float64)
        return raw * np.asarray(self.scale) + np.asarray(self.offset)

    def real_to_grid_bounds(
        self, lower: Tuple[float, float, float], upper: Tuple[float, float, float]
    ) -> Tuple[Tuple[int, int, int], Tuple[int, int, int]]:
        """Convert a real-coordinate box to the grid box covering it.

        The lower corner is floored and the upper corner ceiled, so no point
        of the real box is lost.
        """
        low = []
        high = []
        for axis in range(3):
            scale = self.scale[axis]
            base = self.offset[axis]
            shift = self.grid_offset[axis]
            low.append(math.floor((lower[axis] - base) / scale) - shift)
            high.append(math.ceil((upper[axis] - base) / scale) - shift)
        return (low[0], low[1], low[2]), (high[0], high[1], high[2])


def to_grid(
    points: pd.DataFrame, header: LasHeader
) -> Tuple[pd.DataFrame, GridTransform]:
    """Shift raw LAS coordinates so every axis starts at 0.

    Args:
        points: Point frame with raw integer coordinates
        header: Header supplying scale and offset

    Returns:
        Tuple of (point frame in grid coordinates, transform)

    Example:
        >>> frame = pd.DataFrame(
        ...     {"x": [1000, 1001, 1005], "y": [0, 0, 0], "z": [7, 7, 7]}
        ... )
        >>> grid, transform = to_grid(frame, LasHeader())
        >>> grid["x"].tolist(), transform.grid_offset
        ([0, 1, 5], (1000, 0, 7))
    """
    frame = normalize_points(points)
    if len(frame) == 0:
        return frame, GridTransform(scale=header.scale, offset=header.offset)

    minimums = tuple(int(frame[axis].min()) for axis in COORDINATE_COLUMNS)
    for axis, minimum in zip(COORDINATE_COLUMNS, minimums):
        frame[axis] = frame[axis] - minimum

    extent = tuple(int(frame[axis].max()) for axis in COORDINATE_COLUMNS)
    logger.debug(f"Grid offset {minimums}, grid extent {extent}")
    transform = GridTransform(
        grid_offset=minimums,  # type: ignore[arg-type]
        scale=header.scale,
        offset=header.offset,
    )
    return frame, transform
