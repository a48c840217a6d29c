"""LAS reader for Point Data Record Format 0 files.

The fixed part of the public header is checked directly (signature, record
format, record length and point count against the file size) so malformed
files fail with a precise message; point decoding is done by laspy.
Variable length records are skipped.
"""

import io
import logging
import struct
from pathlib import Path
from typing import BinaryIO, Tuple, Union

import laspy
import numpy as np
import pandas as pd
from laspy.errors import LaspyException
from pydantic import ValidationError

from src.models.las import LasDataset, LasHeader
from src.models.points import normalize_points

logger = logging.getLogger(__name__)

LAS_SIGNATURE = b"LASF"
BASE_HEADER_SIZE = 227
EXTENDED_HEADER_SIZE = 375
POINT_FORMAT_0_SIZE = 20

# Offsets into the public header block (identical for LAS 1.0 to 1.4).
_VERSION_AT = 24
_LAYOUT_AT = 94
_EXTENDED_COUNT_AT = 247


class LasFormatError(ValueError):
    """Raised when a byte stream is not a readable PDRF-0 LAS file."""


def _check_layout(data: bytes) -> Tuple[int, int, int, int, int]:
    """Validate the fixed header fields.

    Returns:
        Tuple of (minor version, header size, offset to point data,
        record length, point count)
    """
    if len(data) < 4 or data[:4] != LAS_SIGNATURE:
        raise LasFormatError(
            f"Invalid LAS signature {data[:4]!r}, expected {LAS_SIGNATURE!r}"
        )
    if len(data) < BASE_HEADER_SIZE:
        raise LasFormatError(
            f"Truncated LAS header: {len(data)} bytes, need {BASE_HEADER_SIZE}"
        )

    major, minor = struct.unpack_from("<BB", data, _VERSION_AT)
    header_size, point_offset, _vlrs, point_format, record_length, legacy_count = (
        struct.unpack_from("<HIIBHI", data, _LAYOUT_AT)
    )
    if major != 1:
        raise LasFormatError(f"Unsupported LAS version {major}.{minor}")
    if point_format != 0:
        raise LasFormatError(
            f"Unsupported point data record format {point_format}; only format 0 "
            f"is supported"
        )
    if record_length < POINT_FORMAT_0_SIZE:
        raise LasFormatError(
            f"Point record length {record_length} is shorter than "
            f"{POINT_FORMAT_0_SIZE} bytes"
        )

    count = legacy_count
    if minor >= 4 and legacy_count == 0 and header_size >= EXTENDED_HEADER_SIZE:
        if len(data) < EXTENDED_HEADER_SIZE:
            raise LasFormatError("Truncated LAS 1.4 header")
        (count,) = struct.unpack_from("<Q", data, _EXTENDED_COUNT_AT)

    needed = point_offset + count * record_length
    if len(data) < needed:
        available = max(0, len(data) - point_offset) // record_length
        raise LasFormatError(
            f"Truncated point data: header declares {count} points, "
            f"file holds {available}"
        )
    return minor, header_size, point_offset, record_length, count


def _classification_byte(las: "laspy.LasData") -> np.ndarray:
    """Rebuild the full classification byte from laspy's sub-fields."""
    value = np.asarray(las.classification).astype(np.uint8)
    value = value | (np.asarray(las.synthetic).astype(np.uint8) << 5)
    value = value | (np.asarray(las.key_point).astype(np.uint8) << 6)
    return value | (np.asarray(las.withheld).astype(np.uint8) << 7)


def _points_frame(las: "laspy.LasData") -> pd.DataFrame:
    columns = {
        "x": las.X,
        "y": las.Y,
        "z": las.Z,
        "intensity": las.intensity,
        "return_number": las.return_number,
        "number_of_returns": las.number_of_returns,
        "scan_direction_flag": las.scan_direction_flag,
        "edge_of_flight_line": las.edge_of_flight_line,
        "scan_angle_rank": las.scan_angle_rank,
        "user_data": las.user_data,
        "point_source_id": las.point_source_id,
    }
    frame = pd.DataFrame(
        {name: np.asarray(values).astype(np.int64) for name, values in columns.items()}
    )
    frame["classification"] = _classification_byte(las)
    return normalize_points(frame)


def _warn_on_return_mismatch(points: pd.DataFrame) -> None:
    returns = points["return_number"].to_numpy()
    totals = points["number_of_returns"].to_numpy()
    bad = (returns > 0) & (totals > 0) & (returns > totals)
    if bad.any():
        logger.warning(
            f"{int(bad.sum())} point(s) have return number greater than "
            f"number of returns"
        )


class LasReader:
    """Reader for PDRF-0 LAS files (versions 1.0 to 1.4).

    Example:
        >>> reader = LasReader()
        >>> dataset = reader.read_file("cloud.las")
        >>> dataset.header.point_count == len(dataset)
        True
    """

    def read(self, stream: Union[BinaryIO, bytes]) -> LasDataset:
        """Parse a LAS byte stream.

        Args:
            stream: Binary stream positioned at the signature, or raw bytes

        Returns:
            Header and points with raw integer coordinates

        Raises:
            LasFormatError: On a bad signature, a point format other than 0,
                a record length under 20 bytes or truncated point data
        """
        data = stream if isinstance(stream, bytes) else stream.read()
        minor, header_size, point_offset, record_length, count = _check_layout(data)

        try:
            with laspy.open(io.BytesIO(data)) as source:
                las = source.read()
        except (LaspyException, ValueError) as e:
            raise LasFormatError(f"Unreadable LAS file: {e}") from e

        if len(las.points) != count:
            raise LasFormatError(
                f"Header declares {count} points but {len(las.points)} were decoded"
            )

        points = _points_frame(las)
        _warn_on_return_mismatch(points)

        try:
            header = self._build_header(
                las.header, minor, header_size, point_offset, record_length, count
            )
        except ValidationError as e:
            raise LasFormatError(f"Invalid LAS header: {e}") from e
        logger.info(f"Read {count} points from LAS {header.version} file")
        return LasDataset(header=header, points=points)

    @staticmethod
    def _build_header(
        source_header: "laspy.LasHeader",
        minor: int,
        header_size: int,
        point_offset: int,
        record_length: int,
        count: int,
    ) -> LasHeader:
        created = source_header.creation_date
        return LasHeader(
            version_major=1,
            version_minor=minor,
            file_source_id=int(source_header.file_source_id),
            system_identifier=str(source_header.system_identifier),
            generating_software=str(source_header.generating_software),
            creation_day=created.timetuple().tm_yday if created else 0,
            creation_year=created.year if created else 0,
            header_size=header_size,
            offset_to_point_data=point_offset,
            number_of_vlrs=len(source_header.vlrs),
            point_record_length=record_length,
            point_count=count,
            points_by_return=tuple(
                int(v) for v in source_header.number_of_points_by_return
            ),
            scale=tuple(float(v) for v in source_header.scales),
            offset=tuple(float(v) for v in source_header.offsets),
            mins=tuple(float(v) for v in source_header.mins),
            maxs=tuple(float(v) for v in source_header.maxs),
        )

    def read_file(self, path: Union[str, Path]) -> LasDataset:
        """Parse a LAS file from disk."""
        with open(path, "rb") as f:
            return self.read(f)


def read_las(stream: Union[BinaryIO, bytes]) -> LasDataset:
    """Parse a LAS byte stream; see :meth:`LasReader.read`."""
    return LasReader().read(stream)


def read_las_file(path: Union[str, Path]) -> LasDataset:
    """Parse a LAS file from disk; see :meth:`LasReader.read`."""
    return LasReader().read_file(path)
