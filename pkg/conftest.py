"""
Global pytest configuration and fixtures.
"""
import os
from typing import Dict, Iterator

import numpy as np
import pandas as pd
import pytest

from src.calculators.synthetic import generate_cloud
from src.config import K3LidarSettings, reload_config, reset_logging
from src.index.builder import build_index
from src.index.k3lidar import K3LidarIndex
from src.models.index import IndexConfig
from src.models.points import normalize_points

# Ten points in an 8x8x8 cube, numbered 1..10; point i has intensity 10*i.
# Built with k=2, l=3 they give the bitmaps in TEN_POINT_BITS.
TEN_POINT_COORDS = [
    (7, 2, 3),
    (5, 0, 0),
    (6, 1, 0),
    (4, 4, 4),
    (0, 0, 0),
    (3, 3, 2),
    (2, 2, 3),
    (1, 1, 0),
    (6, 5, 7),
    (7, 7, 7),
]

TEN_POINT_BITS = {
    "T": "1000000000000000",
    "H": "000100110000001",
    "N": "0010010101",
}


@pytest.fixture(scope="session")
def test_env_vars() -> Dict[str, str]:
    """Test environment variables for configuration."""
    return {
        "K3LIDAR_K": "2",
        "K3LIDAR_L": "3",
        "K3LIDAR_OUTPUT_FORMAT": "csv",
        "ENVIRONMENT": "testing",
        "DEBUG": "true",
        "LOG_LEVEL": "DEBUG",
        "LOG_FORMAT": "standard",
    }


@pytest.fixture
def mock_env(test_env_vars, monkeypatch):
    """Mock environment variables for testing."""
    for key, value in test_env_vars.items():
        monkeypatch.setenv(key, value)

    # Clear the global config to force reload with test values
    import src.config.settings

    src.config.settings._config = None

    yield test_env_vars

    src.config.settings._config = None


@pytest.fixture
def test_config(mock_env) -> K3LidarSettings:
    """Test configuration instance."""
    return reload_config()


@pytest.fixture
def ten_points() -> pd.DataFrame:
    """The ten-point example cloud."""
    frame = pd.DataFrame(TEN_POINT_COORDS, columns=["x", "y", "z"])
    frame["intensity"] = [10 * (i + 1) for i in range(len(TEN_POINT_COORDS))]
    return normalize_points(frame)


@pytest.fixture
def ten_point_config() -> IndexConfig:
    return IndexConfig(k=2, l=3, levels=3)


@pytest.fixture
def ten_point_index(ten_points, ten_point_config) -> K3LidarIndex:
    """The ten-point example indexed with k=2, l=3 in an 8x8x8 cube."""
    return build_index(ten_points, ten_point_config)


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded random generator."""
    return np.random.default_rng(20240611)


@pytest.fixture
def small_cloud() -> pd.DataFrame:
    """2000 uniform points in a 256-cube."""
    return generate_cloud(2000, extent=256, seed=11)


@pytest.fixture
def clustered_cloud() -> pd.DataFrame:
    """3000 clustered points in a 512-cube."""
    return generate_cloud(3000, extent=512, distribution="clustered", seed=12)


@pytest.fixture(autouse=True)
def clean_logging() -> Iterator[None]:
    """Drop handlers installed by CLI runs so they do not leak between tests."""
    yield
    reset_logging()


@pytest.fixture(autouse=True)
def cleanup_test_files():
    """Clean up any test files created during testing."""
    yield

    test_files = ["coverage.xml", ".coverage"]
    for file in test_files:
        if os.path.exists(file):
            os.remove(file)


def pytest_collection_modifyitems(config, items):
    """Modify test collection to add markers based on location."""
    for item in items:
        if "tests/unit/" in str(item.fspath):
            item.add_marker(pytest.mark.unit)
        elif "tests/integration/" in str(item.fspath):
            item.add_marker(pytest.mark.integration)
