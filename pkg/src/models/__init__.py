"""Data models for the k3-lidar index.

This package contains Pydantic models and columnar helpers:
- BaseDataModel: Frozen base class with common configuration
- LasHeader, PointRecord, LasDataset: LAS Point Data Record Format 0
- AttributeSpec and the attribute catalogue
- IndexConfig, QueryRegion, AttributeFilter: index shape and queries
- Point frame helpers (canonical columns, row tuples)
"""

from src.models.attributes import (
    ATTRIBUTE_NAMES,
    ATTRIBUTES,
    AttributeKind,
    AttributeSpec,
    UnknownAttributeError,
    get_attribute,
)
from src.models.base import BaseDataModel
from src.models.index import AttributeFilter, IndexConfig, QueryRegion
from src.models.las import LasDataset, LasHeader, PointRecord
from src.models.points import (
    COORDINATE_COLUMNS,
    POINT_COLUMNS,
    PointDataError,
    canonical_rows,
    empty_points,
    frame_rows,
    normalize_points,
)

__all__ = [
    "ATTRIBUTE_NAMES",
    "ATTRIBUTES",
    "AttributeFilter",
    "AttributeKind",
    "AttributeSpec",
    "BaseDataModel",
    "COORDINATE_COLUMNS",
    "IndexConfig",
    "LasDataset",
    "LasHeader",
    "POINT_COLUMNS",
    "PointDataError",
    "PointRecord",
    "QueryRegion",
    "UnknownAttributeError",
    "canonical_rows",
    "empty_points",
    "frame_rows",
    "get_attribute",
    "normalize_points",
]
