"""Encoding of attribute columns.

One-bit attributes are stored as bitmaps; every other attribute is a DAC
sequence, zigzag-mapped first when the attribute is signed.
"""

from typing import Union

import numpy as np

from src.models.attributes import AttributeKind, AttributeSpec
from src.succinct import BitVector, DacSequence, zigzag_decode, zigzag_encode

AttributeColumn = Union[DacSequence, BitVector]


def encode_column(spec: AttributeSpec, values: np.ndarray) -> AttributeColumn:
    """Encode one attribute's values in payload order."""
    if spec.kind is AttributeKind.BITMAP:
        return BitVector(np.asarray(values))
    if spec.signed:
        return DacSequence.encode(zigzag_encode(values))
    return DacSequence.encode(np.asarray(values, dtype=np.int64))


def read_column(
    spec: AttributeSpec, column: AttributeColumn, positions: np.ndarray
) -> np.ndarray:
    """Attribute values at payload positions, as int64."""
    raw = column.access_many(positions)
    if spec.signed:
        return zigzag_decode(raw)
    return raw.astype(np.int64)


def decode_column(spec: AttributeSpec, column: AttributeColumn) -> np.ndarray:
    """Every value of a column, as int64."""
    if isinstance(column, BitVector):
        return column.to_numpy().astype(np.int64)
    raw = column.decode_all()
    if spec.signed:
        return zigzag_decode(raw)
    return raw.astype(np.int64)


def column_kind(column: AttributeColumn) -> AttributeKind:
    return AttributeKind.BITMAP if isinstance(column, BitVector) else AttributeKind.DAC
