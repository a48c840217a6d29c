"""Base model for the LAS and index data models.

This module provides a frozen Pydantic base model shared by headers,
point records, index configuration and query descriptions.
"""

from pydantic import BaseModel, ConfigDict


class BaseDataModel(BaseModel):
    """Base class for all data models.

    Models are validated on creation, reject unknown fields and are
    immutable afterwards, so they can be shared between concurrent readers.

    Example:
        >>> class Extent(BaseDataModel):
        ...     side: int
        >>> Extent(side=8).model_dump()
        {'side': 8}
    """

    model_config = ConfigDict(
        # numpy arrays and other non-pydantic types appear in some models
        arbitrary_types_allowed=True,
        extra="forbid",
        frozen=True,
    )
