"""Tests for synthetic clouds."""

import numpy as np
import pytest

from src.calculators.synthetic import (
    SURVEY_OFFSET,
    generate_cloud,
    random_attributes,
    survey_cloud,
)
from src.models.points import POINT_COLUMNS


class TestGenerateCloud:
    """Tests for generate_cloud."""

    @pytest.mark.parametrize("distribution", ["uniform", "clustered"])
    def test_points_stay_in_cube(self, distribution):
        """Test coordinates lie in [0, extent)."""
        frame = generate_cloud(2000, extent=128, distribution=distribution, seed=1)
        assert len(frame) == 2000
        assert list(frame.columns) == list(POINT_COLUMNS)
        coords = frame[["x", "y", "z"]].to_numpy()
        assert coords.min() >= 0
        assert coords.max() < 128

    def test_seed_makes_output_repeatable(self):
        """Test the same seed gives the same frame."""
        assert generate_cloud(100, seed=5).equals(generate_cloud(100, seed=5))

    def test_unknown_distribution(self):
        """Test an unsupported distribution name."""
        with pytest.raises(ValueError):
            generate_cloud(10, distribution="gaussian")  # type: ignore[arg-type]


class TestRandomAttributes:
    """Tests for random_attributes."""

    def test_survey_ranges(self, rng):
        """Test attribute values follow airborne survey ranges."""
        frame = random_attributes(5000, rng)
        assert frame["intensity"].between(0, 255).all()
        assert frame["classification"].between(1, 7).all()
        assert frame["scan_angle_rank"].between(-24, 28).all()
        assert frame["point_source_id"].between(175, 227).all()
        assert (frame["return_number"] <= frame["number_of_returns"]).all()


class TestSurveyCloud:
    """Tests for survey_cloud."""

    def test_header_describes_points(self):
        """Test header count, scale and offset."""
        dataset = survey_cloud(500, scale=0.01, seed=4)
        assert dataset.header.point_count == 500
        assert dataset.header.scale == (0.01, 0.01, 0.01)
        assert dataset.header.offset == SURVEY_OFFSET

    def test_bounds_match_points(self):
        """Test header bounds equal the scaled coordinate extremes."""
        dataset = survey_cloud(300, seed=8)
        raw_x = dataset.points["x"].to_numpy()
        scale = dataset.header.scale[0]
        assert dataset.header.mins[0] == pytest.approx(
            raw_x.min() * scale + SURVEY_OFFSET[0]
        )
        assert dataset.header.maxs[0] == pytest.approx(
            raw_x.max() * scale + SURVEY_OFFSET[0]
        )

    def test_density_sets_footprint(self):
        """Test 2000 points at 0.5 pts/m2 cover about 63 m on a side."""
        dataset = survey_cloud(2000, density=0.5, scale=1.0, seed=9)
        extent = np.ptp(dataset.points["x"].to_numpy())
        assert 50 <= extent <= 64

    def test_rejects_empty(self):
        """Test at least one point is required."""
        with pytest.raises(ValueError):
            survey_cloud(0)
