"""The k3-lidar index: construction, queries, statistics and file format."""

from src.index.builder import BuildError, build_index
from src.index.k3lidar import IndexTopology, K3LidarIndex, LeafPayload
from src.index.query import count_region, filter_att_region, get_region, locate
from src.index.serializer import (
    IndexFormatError,
    deserialize,
    read_index_file,
    serialize,
    write_index_file,
)
from src.index.stats import IndexStats, compute_stats

__all__ = [
    "BuildError",
    "IndexFormatError",
    "IndexStats",
    "IndexTopology",
    "K3LidarIndex",
    "LeafPayload",
    "build_index",
    "compute_stats",
    "count_region",
    "deserialize",
    "filter_att_region",
    "get_region",
    "locate",
    "read_index_file",
    "serialize",
    "write_index_file",
]
