"""
Integration test fixtures and configuration.

Clouds here are larger than the unit fixtures and are shared per session.
On the 10^5-point clouds, brute-force answers are numpy masks over the source
frame, standing in for ``FlatStore`` scans, which take too long in Python at
that size. ``test_oracle_equivalence`` checks that the two agree.
"""

from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Dict, List, Tuple

import numpy as np
import pandas as pd
import pytest
from click.testing import CliRunner

from src.calculators.grid_transform import to_grid
from src.calculators.synthetic import generate_cloud, survey_cloud
from src.models.index import QueryRegion
from src.models.points import canonical_rows, normalize_points
from src.readers.las_reader import LasDataset

SURVEY_POINTS = 1_000_000


def brute_force(
    frame: pd.DataFrame,
    region: QueryRegion,
    attribute: str = "",
    low: int = 0,
    high: int = -1,
) -> List[Tuple[int, ...]]:
    """Sorted rows of ``frame`` inside ``region`` (and the attribute range)."""
    coords = frame[["x", "y", "z"]].to_numpy()
    mask = np.all(
        (coords >= np.asarray(region.lower)) & (coords <= np.asarray(region.upper)),
        axis=1,
    )
    if attribute:
        values = frame[attribute].to_numpy()
        mask &= (values >= low) & (values <= high)
    return canonical_rows(frame[mask])


def random_box(rng: np.random.Generator, n: int, max_side: int) -> QueryRegion:
    low = rng.integers(0, n, size=3)
    high = np.minimum(low + rng.integers(0, max_side, size=3), n - 1)
    return QueryRegion(lower=tuple(map(int, low)), upper=tuple(map(int, high)))


CUBE_SIDE = 8
LAYOUT_EXTENTS = (8, 4, 2, 1)


def cube_layout(count: int, layout: int, seed: int) -> pd.DataFrame:
    """``count`` points in the 8-cube.

    Successive layouts crowd the points into sub-cubes of side 8, 4, 2 and 1
    placed at a random corner, so coincident points and last-level cells
    come up regularly.
    """
    extent = LAYOUT_EXTENTS[layout % len(LAYOUT_EXTENTS)]
    frame = generate_cloud(count, extent=extent, seed=seed)
    rng = np.random.default_rng(seed + 1)
    shift = rng.integers(0, CUBE_SIDE - extent + 1, size=3)
    for axis, name in enumerate(("x", "y", "z")):
        frame[name] = frame[name].to_numpy(dtype=np.int64) + int(shift[axis])
    return normalize_points(frame)


@lru_cache(maxsize=None)
def every_box(side: int) -> Tuple[QueryRegion, ...]:
    """All inclusive boxes of a cube, lower corner first."""
    spans = list(combinations_with_replacement(range(side), 2))
    return tuple(
        QueryRegion.from_bounds(x0, y0, z0, x1, y1, z1)
        for (x0, x1), (y0, y1), (z0, z1) in product(spans, repeat=3)
    )


def cell_histogram(coords: np.ndarray, side: int) -> np.ndarray:
    """Point count per grid cell, shape (side, side, side)."""
    coords = np.asarray(coords, dtype=np.int64).reshape(-1, 3)
    cells = (coords[:, 0] * side + coords[:, 1]) * side + coords[:, 2]
    return np.bincount(cells, minlength=side**3).reshape(side, side, side)


@pytest.fixture
def runner():
    """Create a Click CLI test runner."""
    return CliRunner()


@pytest.fixture(scope="session")
def oracle_clouds() -> List[pd.DataFrame]:
    """Twenty 10^5-point clouds in a 1024-cube, half of them clustered."""
    return [
        generate_cloud(
            100_000,
            extent=1024,
            distribution="uniform" if seed % 2 else "clustered",
            seed=seed,
        )
        for seed in range(20)
    ]


@pytest.fixture(scope="session")
def survey_dataset() -> LasDataset:
    """A 10^6-point survey-like dataset at 0.5 points per square metre."""
    return survey_cloud(SURVEY_POINTS, density=0.5, seed=2024)


@pytest.fixture(scope="session")
def survey_grid(survey_dataset) -> pd.DataFrame:
    """Survey points shifted onto the grid."""
    points, _ = to_grid(survey_dataset.points, survey_dataset.header)
    return points


@pytest.fixture(scope="session")
def performance_baseline() -> Dict[str, float]:
    """
    Performance limits for the acceptance runs.

    Returns:
        Dict[str, float]: Limits by name
    """
    return {
        "max_las_fraction": 0.6,  # index size vs 20-byte PDRF-0 records
        "min_scan_speedup": 2.0,  # selective queries vs a linear scan
        "build_1m_points_sec": 60.0,
    }
