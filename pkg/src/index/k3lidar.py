"""The k3-lidar index: a succinct octree with leaf payloads.

Layout summary:

- ``T`` has one bit per child of every subdivided node, in breadth-first
  order, except for children at the last level (side 1). A 1 means the
  child holds more than ``l`` points and is subdivided again.
- ``H`` has one bit per 0 in ``T``, followed by one bit per last-level
  cell, telling whether that leaf holds points.
- ``N`` stores the point count of every non-empty leaf in unary
  (``c - 1`` zeros then a 1), in the same order as ``H``.
- ``X``, ``Y``, ``Z`` hold leaf-local coordinates of the points of non-last
  level leaves. Attribute columns hold every point, last-level points
  included, in the same order.

The children of the ``T`` node at position ``p`` start at position
``rank1(T, p + 1) * k**3``; positions at or past ``len(T)`` are last-level
cells.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING, Dict, Optional, Tuple, Union

import numpy as np
import pandas as pd

from src.calculators.grid_transform import GridTransform
from src.index.columns import AttributeColumn
from src.index.query import (
    count_region,
    filter_att_region,
    get_region,
    locate,
    points_frame,
)
from src.models.index import IndexConfig, QueryRegion
from src.succinct import BitVector, DacSequence

if TYPE_CHECKING:
    from src.index.stats import IndexStats


@dataclass(frozen=True)
class IndexTopology:
    """Tree shape bitmaps ``T``, ``H`` and ``N``."""

    t: BitVector
    h: BitVector
    n: BitVector
    children_per_node: int = 8

    @property
    def ones_in_t(self) -> int:
        return self.t.count_ones

    @property
    def zeros_in_t(self) -> int:
        return self.t.count_zeros

    @property
    def is_root_leaf(self) -> bool:
        """True when the whole cube is a single leaf."""
        return len(self.t) == 0 and len(self.h) == 1

    @property
    def point_count(self) -> int:
        """Total points: every point contributes one bit to ``N``."""
        return len(self.n)

    @property
    def leaf_count(self) -> int:
        """Number of non-empty leaves."""
        return self.n.count_ones

    def leaf_index(self, position: int) -> int:
        """``H`` index of the leaf at a ``T`` or last-level position."""
        if position < len(self.t):
            return self.t.rank0(position)
        return self.zeros_in_t + (position - len(self.t))

    def children_start(self, position: int) -> int:
        """First child position of the subdivided node at ``T`` position.

        The root has no ``T`` bit; pass -1 for it.
        """
        return self.t.rank1(position + 1) * self.children_per_node


@dataclass(frozen=True)
class LeafPayload:
    """Leaf-local coordinates and attribute columns."""

    x: DacSequence
    y: DacSequence
    z: DacSequence
    columns: Dict[str, AttributeColumn]

    @property
    def coordinate_count(self) -> int:
        return len(self.x)


class K3LidarIndex:
    """Compressed point cloud answering region and attribute queries.

    Example:
        >>> from src.index.builder import build_index
        >>> index = build_index(points, IndexConfig(k=2, l=3, levels=3))
        >>> frame = index.get_region(QueryRegion.full(index.config.n))
        >>> len(frame) == len(points)
        True
    """

    def __init__(
        self, config: IndexConfig, topology: IndexTopology, payload: LeafPayload
    ):
        self._config = config
        self._topology = topology
        self._payload = payload

    # ------------------------------------------------------------------ basics

    @property
    def config(self) -> IndexConfig:
        return self._config

    @property
    def topology(self) -> IndexTopology:
        return self._topology

    @property
    def payload(self) -> LeafPayload:
        return self._payload

    @property
    def point_count(self) -> int:
        return self._topology.point_count

    @property
    def last_level_point_count(self) -> int:
        """Points stored in last-level cells (no X/Y/Z entry)."""
        return self.point_count - self._payload.coordinate_count

    @property
    def transform(self) -> GridTransform:
        return GridTransform(
            grid_offset=self._config.grid_offset,
            scale=self._config.las_scale,
            offset=self._config.las_offset,
        )

    def __len__(self) -> int:
        return self.point_count

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, K3LidarIndex):
            return NotImplemented
        return self.serialize() == other.serialize()

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"K3LidarIndex(points={self.point_count}, k={self._config.k}, "
            f"l={self._config.l}, levels={self._config.levels})"
        )

    # ----------------------------------------------------------------- queries

    def locate(self, region: QueryRegion) -> Tuple[np.ndarray, np.ndarray]:
        """Global coordinates and payload positions of the points in a box."""
        return locate(self, region)

    def get_region(self, region: QueryRegion) -> pd.DataFrame:
        """Points in a box, with every attribute."""
        return get_region(self, region)

    def filter_att_region(
        self,
        region: QueryRegion,
        attribute: Optional[Union[int, str]] = None,
        low: Optional[int] = None,
        high: Optional[int] = None,
    ) -> pd.DataFrame:
        """Points in a box whose attribute lies in ``[low, high]``."""
        return filter_att_region(self, region, attribute, low, high)

    def count_region(self, region: QueryRegion) -> int:
        return count_region(self, region)

    def decode_all(self) -> pd.DataFrame:
        """Every point, in payload order."""
        coords, positions = locate(self, QueryRegion.full(self._config.n))
        order = np.argsort(positions, kind="stable")
        return points_frame(self, coords[order], positions[order])

    def to_real(self, frame: pd.DataFrame) -> pd.DataFrame:
        """Replace grid x, y, z columns with real-world coordinates."""
        result = frame.copy()
        coords = frame[["x", "y", "z"]].to_numpy()
        real = self.transform.to_real(coords)
        for axis, name in enumerate(("x", "y", "z")):
            result[name] = real[:, axis]
        return result

    # ------------------------------------------------------------ persistence

    def stats(self) -> "IndexStats":
        from src.index.stats import compute_stats

        return compute_stats(self)

    def serialize(self) -> bytes:
        from src.index.serializer import serialize

        return serialize(self)

    @classmethod
    def deserialize(cls, data: bytes) -> "K3LidarIndex":
        from src.index.serializer import deserialize

        return deserialize(data)

    def write(self, path: Union[str, Path]) -> int:
        from src.index.serializer import write_index_file

        return write_index_file(self, path)

    @classmethod
    def read(cls, path: Union[str, Path]) -> "K3LidarIndex":
        from src.index.serializer import read_index_file

        return read_index_file(path)
