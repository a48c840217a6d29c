"""Fixtures shared by the CLI tests."""

import pytest
from click.testing import CliRunner

from src.calculators.grid_transform import to_grid
from src.calculators.synthetic import survey_cloud
from src.index.builder import build_index
from src.models.las import LasHeader
from src.readers.las_reader import read_las_file
from src.writers.las_writer import write_las_file


@pytest.fixture
def runner():
    """Create a Click CLI test runner."""
    return CliRunner()


@pytest.fixture
def survey_las(tmp_path):
    """A 500-point survey-like LAS file."""
    dataset = survey_cloud(500, seed=21)
    path = tmp_path / "survey.las"
    write_las_file(path, dataset.header, dataset.points)
    return path


@pytest.fixture
def example_las(tmp_path, ten_points):
    """The ten-point example as a LAS file with unit scale."""
    path = tmp_path / "example.las"
    write_las_file(path, LasHeader(scale=(1.0, 1.0, 1.0)), ten_points)
    return path


@pytest.fixture
def example_index(tmp_path, example_las):
    """Index file of the ten-point example, built with k=2, l=3."""
    dataset = read_las_file(example_las)
    points, transform = to_grid(dataset.points, dataset.header)
    path = tmp_path / "example.k3l"
    build_index(points, k=2, l=3, transform=transform).write(path)
    return path
