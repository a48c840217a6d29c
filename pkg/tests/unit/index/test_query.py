"""Tests for region and attribute queries."""

from itertools import combinations_with_replacement, product

import numpy as np
import pandas as pd
import pytest

from src.index.builder import build_index
from src.index.query import collect_leaves, count_region, locate, payload_span
from src.models.attributes import UnknownAttributeError
from src.models.index import AttributeFilter, IndexConfig, QueryRegion
from src.models.points import POINT_COLUMNS, canonical_rows, normalize_points
from src.validators.flat_store import FlatStore, scan_filter, scan_region


def random_region(rng, n):
    low = rng.integers(0, n, size=3)
    high = low + rng.integers(0, n // 2 + 1, size=3)
    return QueryRegion(lower=tuple(map(int, low)), upper=tuple(map(int, high)))


class TestExampleQueries:
    """Region queries on the ten-point example."""

    def test_worked_box(self, ten_point_index):
        """Test the box (4,0,0)-(7,3,3) holds points 1, 2 and 3."""
        frame = ten_point_index.get_region(QueryRegion.from_bounds(4, 0, 0, 7, 3, 3))
        assert sorted(frame["intensity"]) == [10, 20, 30]
        assert list(frame.columns) == list(POINT_COLUMNS)

    def test_full_cube(self, ten_point_index, ten_points):
        """Test the whole cube returns every point."""
        frame = ten_point_index.get_region(QueryRegion.full(8))
        assert canonical_rows(frame) == canonical_rows(ten_points)

    def test_single_cell(self, ten_point_index):
        """Test a one-cell box."""
        frame = ten_point_index.get_region(QueryRegion.from_bounds(7, 7, 7, 7, 7, 7))
        assert frame[["x", "y", "z", "intensity"]].values.tolist() == [[7, 7, 7, 100]]

    def test_empty_cell(self, ten_point_index):
        """Test a box inside a non-empty leaf but missing its points."""
        frame = ten_point_index.get_region(QueryRegion.from_bounds(4, 0, 1, 4, 0, 2))
        assert len(frame) == 0
        assert list(frame.columns) == list(POINT_COLUMNS)

    def test_empty_octant(self, ten_point_index):
        """Test the octant (0,0,4)-(3,3,7) holds no points."""
        region = QueryRegion.from_bounds(0, 0, 4, 3, 3, 7)
        assert len(ten_point_index.get_region(region)) == 0
        assert ten_point_index.count_region(region) == 0

    def test_leaf_index_of_t_positions(self, ten_point_index):
        """Test H indices of leaves stored in T count the zeros before them."""
        topology = ten_point_index.topology
        assert topology.leaf_index(4) == 3
        assert topology.leaf_index(15) == 14
        assert topology.h.access(topology.leaf_index(4)) == 1

    def test_leaf_index_of_last_level_cells(self):
        """Test cells after T follow the zeros of T in H."""
        points = normalize_points(
            pd.DataFrame({"x": [3] * 5 + [0], "y": [3] * 5 + [0], "z": [3] * 5 + [0]})
        )
        topology = build_index(points, IndexConfig(k=2, l=2, levels=2)).topology
        assert topology.leaf_index(8) == 7
        assert topology.leaf_index(15) == 14
        assert topology.h.access(14) == 1

    def test_box_spanning_subdivided_node(self, ten_point_index):
        """Test a box cutting through the subdivided first child."""
        frame = ten_point_index.get_region(QueryRegion.from_bounds(1, 1, 0, 2, 2, 3))
        assert sorted(frame["intensity"]) == [70, 80]

    def test_box_clamped_to_cube(self, ten_point_index):
        """Test bounds beyond the cube are clipped."""
        region = QueryRegion.from_bounds(-10, -10, -10, 100, 100, 100)
        assert len(ten_point_index.get_region(region)) == 10

    def test_box_outside_cube(self, ten_point_index):
        """Test a box past the cube is empty."""
        region = QueryRegion.from_bounds(8, 8, 8, 20, 20, 20)
        assert len(ten_point_index.get_region(region)) == 0

    def test_locate_positions(self, ten_point_index):
        """Test payload positions of the worked box."""
        coords, positions = locate(
            ten_point_index, QueryRegion.from_bounds(4, 0, 0, 7, 3, 3)
        )
        assert sorted(positions.tolist()) == [0, 1, 2]
        assert sorted(map(tuple, coords.tolist())) == [(5, 0, 0), (6, 1, 0), (7, 2, 3)]

    def test_count_region(self, ten_point_index):
        """Test counting without building a frame."""
        region = QueryRegion.from_bounds(0, 0, 0, 3, 3, 3)
        assert count_region(ten_point_index, region) == 4

    def test_payload_span(self, ten_point_index):
        """Test spans of the non-empty leaves in H order."""
        topology = ten_point_index.topology
        spans = [payload_span(topology, h) for h in range(len(topology.h))]
        assert [s for s in spans if s is not None] == [(0, 3), (3, 6), (6, 8), (8, 10)]
        assert spans[0] is None

    def test_collect_leaves_prunes(self, ten_point_index):
        """Test a box in one octant visits a single leaf."""
        ranges = collect_leaves(
            ten_point_index, QueryRegion.from_bounds(4, 4, 4, 7, 7, 7)
        )
        assert ranges.leaf_spans == [(3, 6)]
        assert ranges.leaf_origins == [(4, 4, 4)]


class TestAttributeFilter:
    """Tests for filter_att_region."""

    def test_intensity_range(self, ten_point_index):
        """Test an inclusive intensity range over the whole cube."""
        frame = ten_point_index.filter_att_region(
            QueryRegion.full(8), "intensity", 20, 40
        )
        assert sorted(frame["intensity"]) == [20, 30, 40]

    def test_filter_and_box_compose(self, ten_point_index):
        """Test the filter only keeps points inside the box."""
        frame = ten_point_index.filter_att_region(
            QueryRegion.from_bounds(4, 0, 0, 7, 3, 3), "intensity", 15, 100
        )
        assert sorted(frame["intensity"]) == [20, 30]

    def test_filter_by_id(self, ten_point_index):
        """Test attributes can be given by numeric id."""
        frame = ten_point_index.filter_att_region(QueryRegion.full(8), 0, 90, 90)
        assert frame["intensity"].tolist() == [90]

    def test_open_bounds(self, ten_point_index):
        """Test omitted bounds take the attribute's declared range."""
        frame = ten_point_index.filter_att_region(QueryRegion.full(8), "intensity", 95)
        assert frame["intensity"].tolist() == [100]

    def test_filter_on_region(self, ten_point_index):
        """Test a filter carried by the region itself."""
        region = QueryRegion(
            lower=(0, 0, 0),
            upper=(7, 7, 7),
            attribute_filter=AttributeFilter(attribute="intensity", low=50, high=60),
        )
        assert sorted(ten_point_index.get_region(region)["intensity"]) == [50, 60]
        assert ten_point_index.count_region(region) == 2
        assert len(ten_point_index.filter_att_region(region)) == 2

    def test_unknown_attribute(self, ten_point_index):
        """Test an attribute outside the catalogue."""
        with pytest.raises(UnknownAttributeError):
            ten_point_index.filter_att_region(QueryRegion.full(8), "colour", 0, 1)

    def test_empty_range(self, ten_point_index):
        """Test low above high."""
        with pytest.raises(ValueError, match="empty"):
            ten_point_index.filter_att_region(QueryRegion.full(8), "intensity", 5, 1)

    def test_no_filter_given(self, ten_point_index):
        """Test a call without attribute or region filter."""
        with pytest.raises(ValueError):
            ten_point_index.filter_att_region(QueryRegion.full(8))

    def test_signed_attribute(self, small_cloud):
        """Test negative scan angles are filtered correctly."""
        index = build_index(small_cloud, k=2, l=16)
        store = FlatStore.from_frame(small_cloud)
        region = QueryRegion.full(index.config.n)
        frame = index.filter_att_region(region, "scan_angle_rank", -10, -2)
        expected = scan_filter(store, region, "scan_angle_rank", -10, -2)
        assert canonical_rows(frame) == sorted(expected)
        assert len(expected) > 0


class TestAgainstFlatScan:
    """Query results compared with a linear scan."""

    @pytest.mark.parametrize("k,l", [(2, 2), (2, 32), (3, 10), (4, 50)])
    def test_random_boxes(self, small_cloud, rng, k, l):  # noqa: E741
        """Test random boxes return the same multiset as the scan."""
        index = build_index(small_cloud, k=k, l=l)
        store = FlatStore.from_frame(small_cloud)
        for _ in range(40):
            region = random_region(rng, index.config.n)
            expected = sorted(scan_region(store, region))
            assert canonical_rows(index.get_region(region)) == expected

    def test_clustered_boxes_with_filter(self, clustered_cloud, rng):
        """Test filtered queries on a skewed cloud."""
        index = build_index(clustered_cloud, k=2, l=8)
        store = FlatStore.from_frame(clustered_cloud)
        for attribute in ("intensity", "classification", "edge_of_flight_line"):
            for _ in range(10):
                region = random_region(rng, index.config.n)
                low, high = sorted(map(int, rng.integers(0, 60, size=2)))
                frame = index.filter_att_region(region, attribute, low, high)
                expected = scan_filter(store, region, attribute, low, high)
                assert canonical_rows(frame) == sorted(expected)

    def test_every_box_of_small_cube(self, rng):
        """Test all boxes of a 4-cube with duplicates and last-level cells."""
        coords = rng.integers(0, 4, size=(40, 3))
        points = np.column_stack([coords, rng.integers(0, 256, size=40)])
        frame = pd.DataFrame(points, columns=["x", "y", "z", "intensity"])
        index = build_index(frame, IndexConfig(k=2, l=2, levels=2))
        store = FlatStore.from_frame(normalize_points(frame))
        spans = list(combinations_with_replacement(range(4), 2))
        for (x0, x1), (y0, y1), (z0, z1) in product(spans, repeat=3):
            region = QueryRegion.from_bounds(x0, y0, z0, x1, y1, z1)
            expected = sorted(scan_region(store, region))
            assert canonical_rows(index.get_region(region)) == expected
