"""Synthetic LiDAR clouds for tests and benchmarks.

Attribute ranges follow a typical airborne survey: intensity 0-255, up to
four returns, classification 1-7, scan angle -24..28 degrees and flight
line ids 175-227.
"""

import logging
import math
from typing import Literal, Optional

import numpy as np
import pandas as pd

from src.models.las import LasDataset, LasHeader
from src.models.points import POINT_COLUMNS, normalize_points

logger = logging.getLogger(__name__)

Distribution = Literal["uniform", "clustered"]

SURVEY_OFFSET = (400000.0, 4400000.0, 0.0)


def random_attributes(count: int, rng: np.random.Generator) -> pd.DataFrame:
    """Attribute columns with survey-like value ranges."""
    number_of_returns = rng.choice(
        np.arange(1, 5), size=count, p=[0.7, 0.2, 0.07, 0.03]
    )
    return_number = 1 + (rng.random(count) * number_of_returns).astype(np.int64)
    intensity = np.clip(rng.gamma(2.0, 30.0, size=count), 0, 255).astype(np.int64)
    return pd.DataFrame(
        {
            "intensity": intensity,
            "return_number": return_number,
            "number_of_returns": number_of_returns,
            "scan_direction_flag": rng.integers(0, 2, size=count),
            "edge_of_flight_line": (rng.random(count) < 0.01).astype(np.int64),
            "classification": rng.integers(1, 8, size=count),
            "scan_angle_rank": rng.integers(-24, 29, size=count),
            "user_data": np.zeros(count, dtype=np.int64),
            "point_source_id": rng.integers(175, 228, size=count),
        }
    )


def generate_cloud(
    count: int,
    extent: int = 1024,
    distribution: Distribution = "uniform",
    seed: Optional[int] = None,
    clusters: int = 8,
) -> pd.DataFrame:
    """Random point frame in grid coordinates ``[0, extent)``.

    Args:
        count: Number of points
        extent: Cube side in grid units
        distribution: "uniform", or "clustered" for Gaussian blobs
            stretched along x like flight strips
        seed: Seed for the random generator
        clusters: Number of blobs for the clustered distribution

    Returns:
        Canonical point frame
    """
    rng = np.random.default_rng(seed)
    if distribution == "uniform":
        coords = rng.integers(0, extent, size=(count, 3))
    elif distribution == "clustered":
        centres = rng.uniform(0, extent, size=(clusters, 3))
        spread = np.array([extent / 6.0, extent / 24.0, extent / 48.0])
        owner = rng.integers(0, clusters, size=count)
        samples = centres[owner] + rng.normal(size=(count, 3)) * spread
        coords = np.clip(np.rint(samples), 0, extent - 1).astype(np.int64)
    else:
        raise ValueError(f"Unknown distribution: {distribution}")

    frame = pd.DataFrame(coords, columns=["x", "y", "z"])
    frame = pd.concat([frame, random_attributes(count, rng)], axis=1)
    return normalize_points(frame[list(POINT_COLUMNS)])


def survey_cloud(
    count: int,
    density: float = 0.5,
    scale: float = 0.01,
    relief: float = 60.0,
    seed: Optional[int] = None,
) -> LasDataset:
    """Airborne-survey-like dataset with raw LAS integers.

    Points cover a square whose area gives ``density`` points per square
    metre, over a smooth terrain of ``relief`` metres with a little
    vegetation above it.

    Args:
        count: Number of points
        density: Points per square metre
        scale: LAS scale factor on every axis
        relief: Terrain height range in metres
        seed: Seed for the random generator

    Returns:
        Dataset with a header (scale, offset, bounds) and raw points
    """
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    rng = np.random.default_rng(seed)
    side = math.sqrt(count / density)
    east = rng.uniform(0, side, size=count)
    north = rng.uniform(0, side, size=count)
    terrain = relief * 0.5 * (
        1 + np.sin(east / side * 2 * np.pi) * np.cos(north / side * 3 * np.pi)
    )
    canopy = np.where(rng.random(count) < 0.3, rng.exponential(6.0, size=count), 0.0)
    elevation = terrain + canopy

    raw = np.rint(np.column_stack([east, north, elevation]) / scale).astype(np.int64)

    frame = pd.DataFrame(raw, columns=["x", "y", "z"])
    frame = pd.concat([frame, random_attributes(count, rng)], axis=1)
    frame = normalize_points(frame[list(POINT_COLUMNS)])

    mins = tuple(float(v) for v in (raw.min(axis=0) * scale + SURVEY_OFFSET))
    maxs = tuple(float(v) for v in (raw.max(axis=0) * scale + SURVEY_OFFSET))
    header = LasHeader(
        scale=(scale, scale, scale),
        offset=SURVEY_OFFSET,
        mins=mins,  # type: ignore[arg-type]
        maxs=maxs,  # type: ignore[arg-type]
        point_count=count,
    )
    logger.debug(f"Generated survey cloud of {count} points over {side:.0f} m")
    return LasDataset(header=header, points=frame)
