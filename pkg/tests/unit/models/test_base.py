"""Unit tests for base model functionality."""

from typing import Tuple

import numpy as np
import pytest
from pydantic import ValidationError

from src.models.base import BaseDataModel


class Extent(BaseDataModel):
    side: int
    origin: Tuple[int, int, int] = (0, 0, 0)


class TestBaseDataModel:
    """Test configuration shared by every data model."""

    def test_model_to_dict(self):
        """Test model serialization to dictionary."""
        assert Extent(side=8).model_dump() == {"side": 8, "origin": (0, 0, 0)}

    def test_model_from_dict(self):
        """Test model deserialization coerces lists to tuples."""
        model = Extent.model_validate({"side": 4, "origin": [1, 2, 3]})
        assert model.origin == (1, 2, 3)

    def test_model_is_frozen(self):
        """Test assignment after creation is rejected."""
        model = Extent(side=8)
        with pytest.raises(ValidationError):
            model.side = 16

    def test_models_hash_by_value(self):
        """Test frozen models can be used as dict keys."""
        assert {Extent(side=8): "a"}[Extent(side=8)] == "a"

    def test_unknown_fields_rejected(self):
        """Test extra fields raise instead of being dropped."""
        with pytest.raises(ValidationError, match="side_length"):
            Extent(side=8, side_length=8)

    def test_validation_error_on_invalid_type(self):
        """Test that validation errors are raised for invalid types."""
        with pytest.raises(ValidationError) as exc_info:
            Extent(side="eight")
        assert "validation error" in str(exc_info.value).lower()

    def test_arbitrary_types_allowed(self):
        """Test numpy arrays can be model fields."""

        class Holder(BaseDataModel):
            values: np.ndarray

        holder = Holder(values=np.arange(3))
        assert holder.values.tolist() == [0, 1, 2]
