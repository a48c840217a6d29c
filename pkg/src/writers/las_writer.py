"""LAS writer for Point Data Record Format 0 files.

Files are written by laspy, which recomputes the point count, the bounds
and the per-return counts from the points. No variable length records are
written. Headers with minor version 4 produce LAS 1.4 files, every other
version produces LAS 1.2.
"""

import io
import logging
from pathlib import Path
from typing import Union

import laspy
import numpy as np
import pandas as pd

from src.models.las import LasHeader
from src.models.points import normalize_points

logger = logging.getLogger(__name__)


def _las_version(header: LasHeader) -> str:
    return "1.4" if header.version_minor >= 4 else "1.2"


def build_las_data(header: LasHeader, points: pd.DataFrame) -> "laspy.LasData":
    """Fill a laspy container with the points of a canonical frame.

    Args:
        header: Header supplying scale, offset and descriptive fields
        points: Point frame with raw integer coordinates

    Returns:
        laspy data ready to be written
    """
    frame = normalize_points(points)

    las_header = laspy.LasHeader(point_format=0, version=_las_version(header))
    las_header.scales = np.array(header.scale, dtype=np.float64)
    las_header.offsets = np.array(header.offset, dtype=np.float64)
    las_header.system_identifier = header.system_identifier
    las_header.generating_software = header.generating_software
    las_header.file_source_id = header.file_source_id
    las_header.point_count = len(frame)

    las = laspy.LasData(las_header)
    if len(frame) == 0:
        return las

    las.X = frame["x"].to_numpy().astype(np.int32)
    las.Y = frame["y"].to_numpy().astype(np.int32)
    las.Z = frame["z"].to_numpy().astype(np.int32)
    las.intensity = frame["intensity"].to_numpy().astype(np.uint16)
    las.return_number = frame["return_number"].to_numpy().astype(np.uint8)
    las.number_of_returns = frame["number_of_returns"].to_numpy().astype(np.uint8)
    las.scan_direction_flag = frame["scan_direction_flag"].to_numpy().astype(np.uint8)
    las.edge_of_flight_line = frame["edge_of_flight_line"].to_numpy().astype(np.uint8)

    classification = frame["classification"].to_numpy().astype(np.uint8)
    las.classification = classification & 31
    las.synthetic = (classification >> 5) & 1
    las.key_point = (classification >> 6) & 1
    las.withheld = (classification >> 7) & 1

    las.scan_angle_rank = frame["scan_angle_rank"].to_numpy().astype(np.int8)
    las.user_data = frame["user_data"].to_numpy().astype(np.uint8)
    las.point_source_id = frame["point_source_id"].to_numpy().astype(np.uint16)
    return las


def write_las(header: LasHeader, points: pd.DataFrame) -> bytes:
    """Encode points as a PDRF-0 LAS file.

    Args:
        header: Header supplying scale, offset and descriptive fields
        points: Point frame with raw integer coordinates

    Returns:
        The complete file contents

    Example:
        >>> from src.models.points import empty_points
        >>> data = write_las(LasHeader(), empty_points())
        >>> data[:4]
        b'LASF'
    """
    las = build_las_data(header, points)
    buffer = io.BytesIO()
    las.write(buffer)
    logger.debug(f"Encoded {len(points)} points as LAS {_las_version(header)}")
    return buffer.getvalue()


def write_las_file(
    path: Union[str, Path], header: LasHeader, points: pd.DataFrame
) -> int:
    """Write points to a LAS file on disk.

    Returns:
        Number of bytes written
    """
    data = write_las(header, points)
    Path(path).write_bytes(data)
    logger.info(f"Wrote {len(points)} points to {path}")
    return len(data)
