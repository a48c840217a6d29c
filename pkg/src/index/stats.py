"""Space and shape statistics of an index."""

from typing import TYPE_CHECKING, Dict, List, Tuple

from pydantic import Field, computed_field

from src.models.base import BaseDataModel

if TYPE_CHECKING:
    from src.index.k3lidar import K3LidarIndex

LAS_RECORD_BYTES = 20


class IndexStats(BaseDataModel):
    """Summary of an index.

    Attributes:
        point_count: Points stored
        k, l, levels, n: Index configuration
        t_bits, h_bits, n_bits: Lengths of the T, H and N bitmaps
        leaf_count: Non-empty leaves
        last_level_points: Points in last-level cells (no stored coordinates)
        depth: Deepest tree level holding nodes (0 when the root is a leaf)
        structure_bytes: Serialized size of every structure
        total_bytes: Size of the serialized index
    """

    point_count: int = Field(..., ge=0)
    k: int
    l: int  # noqa: E741
    levels: int
    n: int
    t_bits: int
    h_bits: int
    n_bits: int
    leaf_count: int
    last_level_points: int
    depth: int
    structure_bytes: Dict[str, int]
    total_bytes: int

    @computed_field  # type: ignore[misc]
    @property
    def bits_per_point(self) -> float:
        if self.point_count == 0:
            return 0.0
        return self.total_bytes * 8 / self.point_count

    @computed_field  # type: ignore[misc]
    @property
    def las_bytes(self) -> int:
        """Size of the same points as PDRF-0 records."""
        return self.point_count * LAS_RECORD_BYTES

    @computed_field  # type: ignore[misc]
    @property
    def las_ratio(self) -> float:
        """Index size as a fraction of the PDRF-0 record size."""
        if self.point_count == 0:
            return 0.0
        return self.total_bytes / self.las_bytes

    def as_rows(self) -> List[Tuple[str, str]]:
        """(label, value) pairs for display."""
        rows = [
            ("Points", f"{self.point_count:,}"),
            ("k / l", f"{self.k} / {self.l}"),
            ("Levels (cube side)", f"{self.levels} ({self.n})"),
            ("Tree depth reached", str(self.depth)),
            ("|T| bits", f"{self.t_bits:,}"),
            ("|H| bits", f"{self.h_bits:,}"),
            ("|N| bits", f"{self.n_bits:,}"),
            ("Non-empty leaves", f"{self.leaf_count:,}"),
            ("Last-level points", f"{self.last_level_points:,}"),
        ]
        for name, size in self.structure_bytes.items():
            rows.append((f"{name} bytes", f"{size:,}"))
        rows.extend(
            [
                ("Total bytes", f"{self.total_bytes:,}"),
                ("Bits per point", f"{self.bits_per_point:.2f}"),
                ("LAS PDRF-0 bytes", f"{self.las_bytes:,}"),
                ("Size vs LAS", f"{self.las_ratio:.1%}"),
            ]
        )
        return rows


def tree_depth(index: "K3LidarIndex") -> int:
    """Deepest level holding nodes, walking ``T`` one level at a time."""
    topology = index.topology
    if topology.is_root_leaf:
        return 0
    t = topology.t
    width = index.config.children_per_node
    position = 0
    depth = 1
    while position < len(t):
        ones = t.rank1(position + width) - t.rank1(position)
        position += width
        if ones == 0:
            break
        width = ones * index.config.children_per_node
        depth += 1
    return depth


def compute_stats(index: "K3LidarIndex") -> IndexStats:
    """Collect sizes and shape figures of an index."""
    from src.index.serializer import serialized_size

    topology = index.topology
    payload = index.payload
    sizes = {
        "T": topology.t.serialized_size,
        "H": topology.h.serialized_size,
        "N": topology.n.serialized_size,
        "X": payload.x.serialized_size,
        "Y": payload.y.serialized_size,
        "Z": payload.z.serialized_size,
    }
    for name, column in payload.columns.items():
        sizes[name] = column.serialized_size

    config = index.config
    return IndexStats(
        point_count=index.point_count,
        k=config.k,
        l=config.l,
        levels=config.levels,
        n=config.n,
        t_bits=len(topology.t),
        h_bits=len(topology.h),
        n_bits=len(topology.n),
        leaf_count=topology.leaf_count,
        last_level_points=index.last_level_point_count,
        depth=tree_depth(index),
        structure_bytes=sizes,
        total_bytes=serialized_size(index),
    )
