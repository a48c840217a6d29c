"""Structural checks on a built or loaded index.

This module provides the IndexValidator class, which verifies the
relationships that must hold between ``T``, ``H``, ``N`` and the payload
arrays of a k3-lidar index. It is used by the ``validate`` command and by
the property tests.
"""

import logging
from typing import List, Tuple

import numpy as np

from src.index.k3lidar import K3LidarIndex
from src.validators.validation_report import ValidationReport

logger = logging.getLogger(__name__)


def leaf_sizes(index: K3LidarIndex) -> np.ndarray:
    """Point count of every leaf, indexed like ``H`` (0 for empty leaves)."""
    topology = index.topology
    ends = np.flatnonzero(topology.n.to_numpy())
    sizes = np.diff(np.concatenate([[-1], ends]))
    counts = np.zeros(len(topology.h), dtype=np.int64)
    occupied = np.flatnonzero(topology.h.to_numpy())
    if occupied.size == sizes.size:
        counts[occupied] = sizes
    return counts


def level_spans(index: K3LidarIndex) -> List[Tuple[int, int, int]]:
    """(first position, end position, depth) of every level stored in ``T``."""
    t = index.topology.t
    children = index.config.children_per_node
    spans = []
    start, width, depth = 0, children, 1
    while start < len(t) and width > 0:
        end = min(start + width, len(t))
        spans.append((start, end, depth))
        width = (t.rank1(end) - t.rank1(start)) * children
        start, depth = end, depth + 1
    return spans


def subtree_counts(index: K3LidarIndex, sizes: np.ndarray) -> np.ndarray:
    """Points under every position of ``T`` followed by the last-level cells."""
    topology = index.topology
    children = index.config.children_per_node
    t_bits = topology.t.to_numpy()
    t_length = len(t_bits)
    zeros = topology.zeros_in_t

    total = children * (1 + topology.ones_in_t)
    counts = np.zeros(max(total, t_length), dtype=np.int64)
    counts[np.flatnonzero(t_bits == 0)] = sizes[:zeros]
    cells = sizes[zeros:]
    counts[t_length : t_length + cells.size] = cells

    ones = np.flatnonzero(t_bits)
    # Children follow their parent, so filling from the back sees them done.
    for rank in range(ones.size, 0, -1):
        first = rank * children
        counts[ones[rank - 1]] = counts[first : first + children].sum()
    return counts


class IndexValidator:
    """Runs the structural invariant suite on an index.

    Example:
        >>> report = IndexValidator().validate(index)
        >>> report.is_valid()
        True
    """

    def validate(self, index: K3LidarIndex) -> ValidationReport:
        """Check every structural invariant.

        Args:
            index: Index to check

        Returns:
            ValidationReport with one ERROR per violated invariant
        """
        report = ValidationReport()
        self._check_sibling_groups(index, report)
        self._check_h_length(index, report)
        self._check_unary_groups(index, report)
        self._check_column_lengths(index, report)
        if report.is_valid():
            sizes = leaf_sizes(index)
            self._check_coordinate_count(index, sizes, report)
            self._check_threshold(index, sizes, report)
            self._check_local_coordinates(index, sizes, report)
        logger.info(f"Validated index: {report.summary()}")
        return report

    def _check_sibling_groups(
        self, index: K3LidarIndex, report: ValidationReport
    ) -> None:
        report.mark_run("sibling_groups")
        children = index.config.children_per_node
        length = len(index.topology.t)
        if length % children:
            report.add_error(
                "sibling_groups",
                f"|T| = {length} is not a multiple of {children}",
                length,
            )

    def _check_h_length(self, index: K3LidarIndex, report: ValidationReport) -> None:
        report.mark_run("h_length")
        topology = index.topology
        children = index.config.children_per_node
        if len(topology.t) == 0 and index.point_count <= index.config.l:
            expected = 1
        else:
            cells = children * (1 + topology.ones_in_t) - len(topology.t)
            expected = topology.zeros_in_t + cells
        if len(topology.h) != expected:
            report.add_error(
                "h_length",
                f"|H| = {len(topology.h)}, expected {expected} "
                f"(zeros of T plus last-level cells)",
                len(topology.h),
            )

    def _check_unary_groups(
        self, index: K3LidarIndex, report: ValidationReport
    ) -> None:
        report.mark_run("unary_groups")
        topology = index.topology
        if topology.n.count_ones != topology.h.count_ones:
            report.add_error(
                "unary_groups",
                f"N has {topology.n.count_ones} unary groups but H marks "
                f"{topology.h.count_ones} non-empty leaves",
                topology.n.count_ones,
            )
        if len(topology.n) and not topology.n.access(len(topology.n) - 1):
            report.add_error("unary_groups", "N does not end with a group terminator")

    def _check_column_lengths(
        self, index: K3LidarIndex, report: ValidationReport
    ) -> None:
        report.mark_run("column_lengths")
        total = index.point_count
        for name, column in index.payload.columns.items():
            if len(column) != total:
                report.add_error(
                    "column_lengths",
                    f"Column {name} has {len(column)} entries, expected {total}",
                    len(column),
                )

    def _check_coordinate_count(
        self, index: K3LidarIndex, sizes: np.ndarray, report: ValidationReport
    ) -> None:
        report.mark_run("coordinate_count")
        payload = index.payload
        if index.topology.is_root_leaf:
            expected = index.point_count
        else:
            expected = index.point_count - int(sizes[index.topology.zeros_in_t :].sum())
        lengths = {len(payload.x), len(payload.y), len(payload.z)}
        if lengths != {expected}:
            report.add_error(
                "coordinate_count",
                f"X/Y/Z lengths {sorted(lengths)}, expected {expected} "
                f"(points outside last-level cells)",
                sorted(lengths),
            )

    def _check_threshold(
        self, index: K3LidarIndex, sizes: np.ndarray, report: ValidationReport
    ) -> None:
        report.mark_run("threshold")
        topology = index.topology
        limit = index.config.l
        if len(topology.t) == 0:
            if topology.is_root_leaf and index.point_count > limit:
                report.add_error(
                    "threshold",
                    f"Root leaf holds {index.point_count} points, limit is {limit}",
                    index.point_count,
                )
            return

        counts = subtree_counts(index, sizes)
        root_total = int(counts[: index.config.children_per_node].sum())
        if root_total != index.point_count:
            report.add_error(
                "point_count",
                f"Leaves hold {root_total} points, N encodes {index.point_count}",
                root_total,
            )

        t_bits = topology.t.to_numpy()
        # Last-level cells follow T in counts and have no threshold.
        node_counts = counts[: len(t_bits)]
        subdivided = np.flatnonzero(t_bits == 1)
        leaves = np.flatnonzero(t_bits == 0)
        for position in subdivided[node_counts[subdivided] <= limit]:
            report.add_error(
                "threshold",
                f"Subdivided node holds only {int(counts[position])} points",
                int(counts[position]),
                position=int(position),
            )
        for position in leaves[node_counts[leaves] > limit]:
            report.add_error(
                "threshold",
                f"Leaf holds {int(counts[position])} points, limit is {limit}",
                int(counts[position]),
                position=int(position),
            )

    def _check_local_coordinates(
        self, index: K3LidarIndex, sizes: np.ndarray, report: ValidationReport
    ) -> None:
        report.mark_run("local_coordinates")
        topology = index.topology
        config = index.config
        if topology.is_root_leaf:
            leaf_sides = np.array([config.n], dtype=np.int64)
            leaf_counts = sizes[:1]
        else:
            zero_positions = np.flatnonzero(topology.t.to_numpy() == 0)
            depth = np.zeros(zero_positions.size, dtype=np.int64)
            for start, end, level in level_spans(index):
                depth[(zero_positions >= start) & (zero_positions < end)] = level
            leaf_sides = config.k ** (config.levels - depth)
            leaf_counts = sizes[: topology.zeros_in_t]

        limits = np.repeat(leaf_sides, leaf_counts)
        payload = index.payload
        for name, sequence in (("X", payload.x), ("Y", payload.y), ("Z", payload.z)):
            values = sequence.decode_all().astype(np.int64)
            if values.size != limits.size:
                continue
            bad = np.flatnonzero(values >= limits)
            if bad.size:
                report.add_error(
                    "local_coordinates",
                    f"{bad.size} {name} value(s) not below their leaf side",
                    int(values[bad[0]]),
                    position=int(bad[0]),
                )
