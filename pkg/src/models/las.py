"""LAS data models.

This module defines the header, the Point Data Record Format 0 record and the
dataset container produced by the LAS reader and consumed by the writer.
"""

import logging
from typing import Tuple

import pandas as pd
from pydantic import Field, field_validator, model_validator

from src.models.base import BaseDataModel

logger = logging.getLogger(__name__)

Triple = Tuple[float, float, float]

INT32_MIN = -(2**31)
INT32_MAX = 2**31 - 1


class LasHeader(BaseDataModel):
    """Public header block of a LAS file (versions 1.0 to 1.4).

    Only Point Data Record Format 0 is supported. Variable length records
    are skipped on read and never written.

    Attributes:
        version_major: LAS major version (always 1)
        version_minor: LAS minor version (0-4)
        offset_to_point_data: Byte offset of the first point record
        point_data_record_format: Must be 0
        point_record_length: Bytes per point record (>= 20)
        point_count: Number of point records
        scale: Per-axis scale factors (> 0)
        offset: Per-axis offsets
        mins: Per-axis minimum real coordinate
        maxs: Per-axis maximum real coordinate

    Example:
        >>> header = LasHeader(scale=(0.01, 0.01, 0.01))
        >>> header.point_record_length
        20
    """

    version_major: int = Field(1, ge=1, le=1)
    version_minor: int = Field(2, ge=0, le=4)
    file_source_id: int = Field(0, ge=0, le=65535)
    global_encoding: int = Field(0, ge=0, le=65535)
    system_identifier: str = Field("", max_length=32)
    generating_software: str = Field("k3lidar", max_length=32)
    creation_day: int = Field(0, ge=0, le=366)
    creation_year: int = Field(0, ge=0, le=65535)
    header_size: int = Field(227, ge=227)
    offset_to_point_data: int = Field(227, ge=227)
    number_of_vlrs: int = Field(0, ge=0)
    point_data_record_format: int = Field(0, ge=0, le=0)
    point_record_length: int = Field(20, ge=20, le=65535)
    point_count: int = Field(0, ge=0)
    points_by_return: Tuple[int, ...] = (0, 0, 0, 0, 0)
    scale: Triple = (0.01, 0.01, 0.01)
    offset: Triple = (0.0, 0.0, 0.0)
    mins: Triple = (0.0, 0.0, 0.0)
    maxs: Triple = (0.0, 0.0, 0.0)

    @field_validator("scale")
    @classmethod
    def validate_scale(cls, v: Triple) -> Triple:
        """Ensure every scale factor is strictly positive."""
        if any(s <= 0 for s in v):
            raise ValueError(f"scale factors must be positive, got {v}")
        return v

    @model_validator(mode="after")
    def validate_bounds(self) -> "LasHeader":
        """Ensure min <= max on every axis."""
        for axis, lo, hi in zip("xyz", self.mins, self.maxs):
            if lo > hi:
                raise ValueError(f"min {axis} ({lo}) exceeds max {axis} ({hi})")
        return self

    @property
    def version(self) -> str:
        return f"{self.version_major}.{self.version_minor}"


class PointRecord(BaseDataModel):
    """One Point Data Record Format 0 point.

    Coordinates are the raw signed 32-bit integers stored in the file
    (before scale and offset are applied), or grid coordinates when the
    record comes out of an index query.

    Example:
        >>> p = PointRecord(x=5, y=0, z=0, intensity=20)
        >>> p.return_number
        1
    """

    x: int = Field(..., ge=INT32_MIN, le=INT32_MAX)
    y: int = Field(..., ge=INT32_MIN, le=INT32_MAX)
    z: int = Field(..., ge=INT32_MIN, le=INT32_MAX)
    intensity: int = Field(0, ge=0, le=65535)
    return_number: int = Field(1, ge=0, le=7)
    number_of_returns: int = Field(1, ge=0, le=7)
    scan_direction_flag: int = Field(0, ge=0, le=1)
    edge_of_flight_line: int = Field(0, ge=0, le=1)
    classification: int = Field(0, ge=0, le=255)
    scan_angle_rank: int = Field(0, ge=-128, le=127)
    user_data: int = Field(0, ge=0, le=255)
    point_source_id: int = Field(0, ge=0, le=65535)

    @model_validator(mode="after")
    def warn_on_return_mismatch(self) -> "PointRecord":
        """Real files break this rule, so it only warns."""
        if (
            self.return_number
            and self.number_of_returns
            and self.return_number > self.number_of_returns
        ):
            logger.warning(
                f"Point ({self.x}, {self.y}, {self.z}) has return number "
                f"{self.return_number} > number of returns {self.number_of_returns}"
            )
        return self

    def as_tuple(self) -> Tuple[int, ...]:
        """Values in point-frame column order."""
        return tuple(self.model_dump().values())


class LasDataset(BaseDataModel):
    """A parsed LAS file: header plus raw point records as a frame.

    The frame has the columns of ``src.models.points.POINT_COLUMNS`` with
    raw integer coordinates.
    """

    header: LasHeader
    points: pd.DataFrame

    def __len__(self) -> int:
        return len(self.points)
