"""Region and attribute-range queries.

The tree is descended top-down, visiting only the children that overlap the
query box. Every non-empty leaf met on the way contributes its payload range
``[start, end)``, found through ``H`` and ``N``:

    j     = rank1(H, h + 1)                  # ordinal of the non-empty leaf
    start = 0 if j == 1 else select1(N, j - 1) + 1
    end   = select1(N, j) + 1

Leaf points are then decoded and box-tested for all ranges at once.
Last-level cells need no decoding: their coordinates are the cell itself.
"""

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, List, Optional, Tuple, Union

import numpy as np
import pandas as pd

from src.index.columns import read_column
from src.models.attributes import ATTRIBUTES, AttributeSpec, get_attribute
from src.models.index import QueryRegion
from src.models.points import POINT_COLUMNS

if TYPE_CHECKING:
    from src.index.k3lidar import IndexTopology, K3LidarIndex

logger = logging.getLogger(__name__)

Span = Tuple[int, int]
Coordinate = Tuple[int, int, int]


@dataclass
class LeafRanges:
    """Payload ranges collected during a descent."""

    leaf_spans: List[Span] = field(default_factory=list)
    leaf_origins: List[Coordinate] = field(default_factory=list)
    cell_spans: List[Span] = field(default_factory=list)
    cell_coords: List[Coordinate] = field(default_factory=list)

    @property
    def leaf_count(self) -> int:
        return len(self.leaf_spans) + len(self.cell_spans)


def payload_span(topology: "IndexTopology", h: int) -> Optional[Span]:
    """Payload range of the leaf with ``H`` index ``h``; None if empty."""
    if not topology.h.access(h):
        return None
    ordinal = topology.h.rank1(h + 1)
    start = 0 if ordinal == 1 else topology.n.select1(ordinal - 1) + 1
    end = topology.n.select1(ordinal) + 1
    return start, end


def collect_leaves(index: "K3LidarIndex", region: QueryRegion) -> LeafRanges:
    """Descend the tree and gather the leaves overlapping ``region``.

    ``region`` must already be clamped to the cube.
    """
    config = index.config
    topology = index.topology
    k = config.k
    ranges = LeafRanges()

    if topology.is_root_leaf:
        span = payload_span(topology, 0)
        if span is not None:
            ranges.leaf_spans.append(span)
            ranges.leaf_origins.append((0, 0, 0))
        return ranges

    lower = region.lower
    upper = region.upper
    t_length = len(topology.t)

    # (first child position, node origin, child side)
    pending = [(0, (0, 0, 0), config.n // k)]
    while pending:
        start, origin, side = pending.pop()
        bounds = []
        for axis in range(3):
            low = max(lower[axis], origin[axis]) - origin[axis]
            high = min(upper[axis], origin[axis] + k * side - 1) - origin[axis]
            bounds.append(range(low // side, high // side + 1))

        for cx in bounds[0]:
            for cy in bounds[1]:
                for cz in bounds[2]:
                    position = start + (cx * k + cy) * k + cz
                    child = (
                        origin[0] + cx * side,
                        origin[1] + cy * side,
                        origin[2] + cz * side,
                    )
                    is_cell = position >= t_length
                    if not is_cell and topology.t.access(position):
                        children = topology.children_start(position)
                        pending.append((children, child, side // k))
                        continue
                    span = payload_span(topology, topology.leaf_index(position))
                    if span is None:
                        continue
                    if is_cell:
                        ranges.cell_spans.append(span)
                        ranges.cell_coords.append(child)
                    else:
                        ranges.leaf_spans.append(span)
                        ranges.leaf_origins.append(child)
    return ranges


def _expand(spans: List[Span]) -> Tuple[np.ndarray, np.ndarray]:
    """Concatenate ``range(start, end)`` for every span.

    Returns:
        Tuple of (positions, length of every span)
    """
    if not spans:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    bounds = np.asarray(spans, dtype=np.int64)
    lengths = bounds[:, 1] - bounds[:, 0]
    total = int(lengths.sum())
    before = np.cumsum(lengths) - lengths
    positions = np.repeat(bounds[:, 0] - before, lengths) + np.arange(total)
    return positions, lengths


def _empty_result() -> Tuple[np.ndarray, np.ndarray]:
    return np.zeros((0, 3), dtype=np.int64), np.zeros(0, dtype=np.int64)


def locate(index: "K3LidarIndex", region: QueryRegion) -> Tuple[np.ndarray, np.ndarray]:
    """Coordinates and payload positions of the points inside a box.

    Any attribute filter on ``region`` is ignored here.

    Args:
        index: Index to query
        region: Inclusive box in grid coordinates

    Returns:
        Tuple of (int64 array (m, 3) of global coordinates, int64 array of
        payload positions)
    """
    clamped = region.clamp(index.config.n)
    if clamped is None or index.point_count == 0:
        return _empty_result()

    ranges = collect_leaves(index, clamped)
    payload = index.payload

    positions, lengths = _expand(ranges.leaf_spans)
    local = np.column_stack(
        [
            payload.x.access_many(positions),
            payload.y.access_many(positions),
            payload.z.access_many(positions),
        ]
    ).astype(np.int64)
    origins = np.asarray(ranges.leaf_origins, dtype=np.int64).reshape(-1, 3)
    coords = local + np.repeat(origins, lengths, axis=0)
    lower = np.asarray(clamped.lower, dtype=np.int64)
    upper = np.asarray(clamped.upper, dtype=np.int64)
    inside = np.all((coords >= lower) & (coords <= upper), axis=1)
    coords = coords[inside]
    positions = positions[inside]

    cell_positions, cell_lengths = _expand(ranges.cell_spans)
    cells = np.asarray(ranges.cell_coords, dtype=np.int64).reshape(-1, 3)
    cell_points = np.repeat(cells, cell_lengths, axis=0)

    logger.debug(
        f"Region {clamped.lower}-{clamped.upper}: {ranges.leaf_count} leaves, "
        f"{len(positions) + len(cell_positions)} points"
    )
    return (
        np.concatenate([coords, cell_points]),
        np.concatenate([positions, cell_positions]),
    )


def points_frame(
    index: "K3LidarIndex", coords: np.ndarray, positions: np.ndarray
) -> pd.DataFrame:
    """Assemble located points and their attributes into a point frame."""
    data = {
        "x": coords[:, 0].astype(np.int64),
        "y": coords[:, 1].astype(np.int64),
        "z": coords[:, 2].astype(np.int64),
    }
    columns = index.payload.columns
    for spec in ATTRIBUTES:
        values = read_column(spec, columns[spec.name], positions)
        data[spec.name] = values.astype(spec.dtype)
    return pd.DataFrame(data, columns=list(POINT_COLUMNS))


def _resolve_filter(
    region: QueryRegion,
    attribute: Optional[Union[int, str]],
    low: Optional[int],
    high: Optional[int],
) -> Tuple[AttributeSpec, int, int]:
    if attribute is None:
        if region.attribute_filter is None:
            raise ValueError("No attribute filter given")
        flt = region.attribute_filter
        return get_attribute(flt.attribute), flt.low, flt.high

    spec = get_attribute(attribute)
    low = spec.min_value if low is None else low
    high = spec.max_value if high is None else high
    if low > high:
        raise ValueError(f"Attribute range is empty: {low} > {high}")
    return spec, low, high


def _apply_filter(
    index: "K3LidarIndex",
    coords: np.ndarray,
    positions: np.ndarray,
    spec: AttributeSpec,
    low: int,
    high: int,
) -> Tuple[np.ndarray, np.ndarray]:
    values = read_column(spec, index.payload.columns[spec.name], positions)
    keep = (values >= low) & (values <= high)
    return coords[keep], positions[keep]


def get_region(index: "K3LidarIndex", region: QueryRegion) -> pd.DataFrame:
    """Points inside an inclusive box, with all their attributes.

    When ``region`` carries an attribute filter it is applied too.

    Example:
        >>> frame = get_region(index, QueryRegion.from_bounds(4, 0, 0, 7, 3, 3))
        >>> sorted(frame["intensity"])
        [10, 20, 30]
    """
    coords, positions = locate(index, region)
    if region.attribute_filter is not None:
        spec, low, high = _resolve_filter(region, None, None, None)
        coords, positions = _apply_filter(index, coords, positions, spec, low, high)
    return points_frame(index, coords, positions)


def filter_att_region(
    index: "K3LidarIndex",
    region: QueryRegion,
    attribute: Optional[Union[int, str]] = None,
    low: Optional[int] = None,
    high: Optional[int] = None,
) -> pd.DataFrame:
    """Points inside a box whose attribute value lies in ``[low, high]``.

    Args:
        index: Index to query
        region: Inclusive box in grid coordinates
        attribute: Attribute id or name; taken from ``region.attribute_filter``
            when omitted
        low: Inclusive lower bound (attribute minimum if omitted)
        high: Inclusive upper bound (attribute maximum if omitted)

    Returns:
        Matching points with all attributes

    Raises:
        UnknownAttributeError: If the attribute is not stored
        ValueError: If ``low > high`` or no filter is given at all
    """
    spec, low, high = _resolve_filter(region, attribute, low, high)
    coords, positions = locate(index, region)
    coords, positions = _apply_filter(index, coords, positions, spec, low, high)
    return points_frame(index, coords, positions)


def count_region(index: "K3LidarIndex", region: QueryRegion) -> int:
    """Number of points in a box, honouring any attribute filter on it."""
    coords, positions = locate(index, region)
    if region.attribute_filter is not None:
        spec, low, high = _resolve_filter(region, None, None, None)
        coords, positions = _apply_filter(index, coords, positions, spec, low, high)
    return int(len(positions))
