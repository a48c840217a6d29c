"""Coordinate calculations: grid transforms, Morton order, synthetic clouds."""

from src.calculators.grid_transform import GridTransform, to_grid
from src.calculators.morton import child_digits, morton_code, morton_order
from src.calculators.synthetic import generate_cloud, random_attributes, survey_cloud

__all__ = [
    "GridTransform",
    "child_digits",
    "generate_cloud",
    "morton_code",
    "morton_order",
    "random_attributes",
    "survey_cloud",
    "to_grid",
]
