"""Construction of a k3-lidar index from grid points.

Points are sorted once along the full Morton path. The tree is then built
level by level: at each level every point of a still-subdivided node knows
its node's breadth-first rank, so ``rank * k**3 + digit`` numbers the
children in ``T`` order and a single ``bincount`` yields every child's point
count. Because the sort is stable and follows the child digits, the points
of each leaf come out contiguous, in Morton order of their local
coordinates, ties in input order.
"""

import logging
from typing import List, Optional

import numpy as np
import pandas as pd

from src.calculators.grid_transform import GridTransform
from src.calculators.morton import child_digits, morton_order
from src.index.columns import encode_column
from src.index.k3lidar import IndexTopology, K3LidarIndex, LeafPayload
from src.models.attributes import ATTRIBUTES
from src.models.index import DEFAULT_K, DEFAULT_L, IndexConfig
from src.models.points import COORDINATE_COLUMNS, PointDataError, normalize_points
from src.succinct import BitVector, DacSequence
from src.utils.logging_utils import log_function_call

logger = logging.getLogger(__name__)


class BuildError(ValueError):
    """Raised when points cannot be indexed with the given configuration."""


def unary_counts(counts: np.ndarray) -> np.ndarray:
    """Unary code of every count: ``c - 1`` zeros then a 1.

    Example:
        >>> unary_counts(np.array([3, 1])).tolist()
        [0, 0, 1, 1]
    """
    counts = np.asarray(counts, dtype=np.int64)
    bits = np.zeros(int(counts.sum()), dtype=np.uint8)
    if counts.size:
        bits[np.cumsum(counts) - 1] = 1
    return bits


class _LevelOutput:
    """Bits and point orderings accumulated while descending."""

    def __init__(self) -> None:
        self.t_bits: List[np.ndarray] = []
        self.leaf_h: List[np.ndarray] = []
        self.leaf_counts: List[np.ndarray] = []
        self.leaf_points: List[np.ndarray] = []
        self.leaf_local: List[np.ndarray] = []
        self.cell_h = np.zeros(0, dtype=np.uint8)
        self.cell_counts = np.zeros(0, dtype=np.int64)
        self.cell_points = np.zeros(0, dtype=np.int64)


def _descend(coords: np.ndarray, config: IndexConfig) -> _LevelOutput:
    """Run the level-wise subdivision over Morton-sorted coordinates."""
    k = config.k
    children = config.children_per_node
    output = _LevelOutput()

    active = np.arange(len(coords))
    ranks = np.zeros(len(coords), dtype=np.int64)
    nodes = 1
    for depth in range(config.levels):
        side = k ** (config.levels - 1 - depth)
        digits = child_digits(coords[active], k, depth, config.levels)
        keys = ranks * children + digits
        counts = np.bincount(keys, minlength=nodes * children)

        if side == 1:
            output.cell_h = (counts > 0).astype(np.uint8)
            output.cell_counts = counts[counts > 0]
            output.cell_points = active
            logger.debug(
                f"Level {depth + 1}: {counts.size} last-level cells, "
                f"{active.size} points"
            )
            break

        subdivided = counts > config.l
        leaf = ~subdivided
        output.t_bits.append(subdivided.astype(np.uint8))
        output.leaf_h.append((counts[leaf] > 0).astype(np.uint8))
        output.leaf_counts.append(counts[leaf & (counts > 0)])

        stays = subdivided[keys]
        settled = active[~stays]
        output.leaf_points.append(settled)
        output.leaf_local.append(coords[settled] % side)

        new_ranks = np.cumsum(subdivided) - 1
        active = active[stays]
        ranks = new_ranks[keys[stays]]
        nodes = int(subdivided.sum())
        logger.debug(
            f"Level {depth + 1}: {counts.size} children, {nodes} subdivided, "
            f"{settled.size} points settled"
        )
        if nodes == 0:
            break
    return output


def _concat(parts: List[np.ndarray], dtype, width: int = 0) -> np.ndarray:
    if not parts:
        shape = (0, width) if width else (0,)
        return np.zeros(shape, dtype=dtype)
    return np.concatenate(parts).astype(dtype)


@log_function_call(include_args=True)
def build_index(
    points: pd.DataFrame,
    config: Optional[IndexConfig] = None,
    *,
    k: int = DEFAULT_K,
    l: int = DEFAULT_L,  # noqa: E741
    transform: Optional[GridTransform] = None,
) -> K3LidarIndex:
    """Build an index over points in grid coordinates.

    Args:
        points: Point frame with non-negative integer coordinates
        config: Index shape; derived from the point extent, ``k`` and ``l``
            when omitted
        k: Branching factor per axis, used when ``config`` is omitted
        l: Leaf threshold, used when ``config`` is omitted
        transform: Coordinate transform recorded in a derived config

    Returns:
        The built index

    Raises:
        BuildError: If a coordinate lies outside the cube or an attribute
            value does not fit its declared range
    """
    try:
        frame = normalize_points(points)
    except PointDataError as e:
        raise BuildError(str(e)) from e

    coords = frame[list(COORDINATE_COLUMNS)].to_numpy(dtype=np.int64)
    if len(coords) and coords.min() < 0:
        raise BuildError(
            f"Coordinates must be non-negative grid values, found {int(coords.min())}"
        )

    if config is None:
        extent = int(coords.max()) if len(coords) else 0
        extra = {}
        if transform is not None:
            extra = dict(
                grid_offset=transform.grid_offset,
                las_scale=transform.scale,
                las_offset=transform.offset,
            )
        config = IndexConfig.for_extent(extent, k=k, l=l, **extra)
    elif len(coords) and coords.max() >= config.n:
        raise BuildError(
            f"Coordinate {int(coords.max())} outside the cube of side {config.n}"
        )

    order = morton_order(coords, config.k, config.levels)
    sorted_coords = coords[order]

    if len(coords) <= config.l:
        t_bits = np.zeros(0, dtype=np.uint8)
        h_bits = np.array([1 if len(coords) else 0], dtype=np.uint8)
        leaf_counts = np.array([len(coords)] if len(coords) else [], dtype=np.int64)
        payload_order = np.arange(len(coords))
        local = sorted_coords
    else:
        levels = _descend(sorted_coords, config)
        t_bits = _concat(levels.t_bits, np.uint8)
        h_bits = np.concatenate([_concat(levels.leaf_h, np.uint8), levels.cell_h])
        leaf_counts = np.concatenate(
            [_concat(levels.leaf_counts, np.int64), levels.cell_counts]
        )
        payload_order = np.concatenate(
            [_concat(levels.leaf_points, np.int64), levels.cell_points]
        )
        local = _concat(levels.leaf_local, np.int64, width=3)

    topology = IndexTopology(
        t=BitVector(t_bits),
        h=BitVector(h_bits),
        n=BitVector(unary_counts(leaf_counts)),
        children_per_node=config.children_per_node,
    )

    source_rows = order[payload_order]
    columns = {}
    for spec in ATTRIBUTES:
        values = frame[spec.name].to_numpy()[source_rows]
        columns[spec.name] = encode_column(spec, values)

    payload = LeafPayload(
        x=DacSequence.encode(local[:, 0]),
        y=DacSequence.encode(local[:, 1]),
        z=DacSequence.encode(local[:, 2]),
        columns=columns,
    )
    index = K3LidarIndex(config, topology, payload)
    logger.info(
        f"Built index over {len(coords)} points: k={config.k}, l={config.l}, "
        f"levels={config.levels}, |T|={len(topology.t)}, |H|={len(topology.h)}, "
        f"{topology.leaf_count} non-empty leaves"
    )
    return index
