"""Index configuration and query models.

This module defines the configuration stored with every index and the
region/attribute-range descriptions accepted by queries.
"""

from typing import Optional, Tuple

from pydantic import Field, field_validator, model_validator

from src.models.attributes import get_attribute
from src.models.base import BaseDataModel

IntTriple = Tuple[int, int, int]
FloatTriple = Tuple[float, float, float]

DEFAULT_K = 2
DEFAULT_L = 100
MAX_LEVELS = 64


def levels_for_extent(max_coordinate: int, k: int) -> int:
    """Smallest ``levels >= 1`` with ``k**levels > max_coordinate``.

    Example:
        >>> levels_for_extent(7, 2), levels_for_extent(8, 2), levels_for_extent(0, 2)
        (3, 4, 1)
    """
    if max_coordinate < 0:
        raise ValueError(f"max_coordinate must be non-negative, got {max_coordinate}")
    levels = 1
    while k**levels <= max_coordinate:
        levels += 1
    return levels


class IndexConfig(BaseDataModel):
    """Shape and coordinate transform of a k3-lidar index.

    Attributes:
        k: Branching factor per axis (each node has k**3 children)
        l: Leaf threshold; nodes with more than l points are subdivided
        levels: Tree height; the cube side is ``n = k**levels``
        grid_offset: Per-axis raw integer subtracted to reach grid coordinates
        las_scale: LAS scale factors, for real-coordinate reconstruction
        las_offset: LAS offsets, for real-coordinate reconstruction

    Example:
        >>> config = IndexConfig(k=2, l=3, levels=3)
        >>> config.n, config.children_per_node
        (8, 8)
    """

    k: int = Field(DEFAULT_K, ge=2, le=255)
    l: int = Field(DEFAULT_L, ge=1, le=2**32 - 1)  # noqa: E741
    levels: int = Field(1, ge=1, le=MAX_LEVELS)
    grid_offset: IntTriple = (0, 0, 0)
    las_scale: FloatTriple = (1.0, 1.0, 1.0)
    las_offset: FloatTriple = (0.0, 0.0, 0.0)

    @field_validator("grid_offset")
    @classmethod
    def validate_grid_offset(cls, v: IntTriple) -> IntTriple:
        """Grid offsets are raw LAS integers, so they fit in int32."""
        for value in v:
            if not -(2**31) <= value <= 2**31 - 1:
                raise ValueError(f"grid offset {value} does not fit in 32 bits")
        return v

    @field_validator("las_scale")
    @classmethod
    def validate_scale(cls, v: FloatTriple) -> FloatTriple:
        if any(s <= 0 for s in v):
            raise ValueError(f"scale factors must be positive, got {v}")
        return v

    @property
    def n(self) -> int:
        """Side of the padded cube."""
        return self.k**self.levels

    @property
    def children_per_node(self) -> int:
        return self.k**3

    @classmethod
    def for_extent(
        cls,
        max_coordinate: int,
        k: int = DEFAULT_K,
        l: int = DEFAULT_L,  # noqa: E741
        **kwargs,
    ) -> "IndexConfig":
        """Configuration whose cube covers ``[0, max_coordinate]`` on every axis."""
        return cls(k=k, l=l, levels=levels_for_extent(max_coordinate, k), **kwargs)


class AttributeFilter(BaseDataModel):
    """Inclusive value range on one attribute.

    Example:
        >>> AttributeFilter(attribute="intensity", low=10, high=20).attribute
        'intensity'
    """

    attribute: str
    low: int
    high: int

    @field_validator("attribute")
    @classmethod
    def validate_attribute(cls, v: str) -> str:
        """Normalise to the catalogue name; unknown names are rejected."""
        try:
            return get_attribute(v).name
        except KeyError as e:
            raise ValueError(str(e)) from e

    @model_validator(mode="after")
    def validate_range(self) -> "AttributeFilter":
        if self.low > self.high:
            raise ValueError(f"low ({self.low}) cannot exceed high ({self.high})")
        return self

    def matches(self, value: int) -> bool:
        return self.low <= value <= self.high


class QueryRegion(BaseDataModel):
    """Inclusive box in grid coordinates, optionally with an attribute filter.

    Attributes:
        lower: (x_i, y_i, z_i)
        upper: (x_e, y_e, z_e)
        attribute_filter: Optional inclusive attribute range

    Example:
        >>> region = QueryRegion(lower=(0, 0, 0), upper=(3, 3, 3))
        >>> region.contains(1, 2, 3)
        True
    """

    lower: IntTriple
    upper: IntTriple
    attribute_filter: Optional[AttributeFilter] = None

    @model_validator(mode="after")
    def validate_bounds(self) -> "QueryRegion":
        for axis, lo, hi in zip("xyz", self.lower, self.upper):
            if lo > hi:
                raise ValueError(
                    f"{axis} lower bound ({lo}) exceeds upper bound ({hi})"
                )
        return self

    @classmethod
    def full(cls, n: int) -> "QueryRegion":
        """The whole ``n x n x n`` cube."""
        return cls(lower=(0, 0, 0), upper=(n - 1, n - 1, n - 1))

    @classmethod
    def from_bounds(
        cls, x_i: int, y_i: int, z_i: int, x_e: int, y_e: int, z_e: int
    ) -> "QueryRegion":
        return cls(lower=(x_i, y_i, z_i), upper=(x_e, y_e, z_e))

    def clamp(self, n: int) -> Optional["QueryRegion"]:
        """Clip to ``[0, n-1]`` on every axis; None if nothing is left."""
        lower = tuple(max(0, v) for v in self.lower)
        upper = tuple(min(n - 1, v) for v in self.upper)
        if any(lo > hi for lo, hi in zip(lower, upper)):
            return None
        return QueryRegion(
            lower=lower,  # type: ignore[arg-type]
            upper=upper,  # type: ignore[arg-type]
            attribute_filter=self.attribute_filter,
        )

    def contains(self, x: int, y: int, z: int) -> bool:
        return (
            self.lower[0] <= x <= self.upper[0]
            and self.lower[1] <= y <= self.upper[1]
            and self.lower[2] <= z <= self.upper[2]
        )

    @property
    def volume(self) -> int:
        result = 1
        for lo, hi in zip(self.lower, self.upper):
            result *= hi - lo + 1
        return result
