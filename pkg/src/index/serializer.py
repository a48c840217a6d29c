"""Binary index file format.

Layout (all integers little-endian):

    magic "K3L1" | version u16 | k u8 | l u32 | levels u8
    grid offset 3 x i32 | LAS scale 3 x f64 | LAS offset 3 x f64
    T, H, N bitvectors | X, Y, Z DAC sequences
    column count u8 | per column: attribute id u8, kind u8, structure

Kind 0 is a DAC sequence and kind 1 a bitvector. Grid offsets are written
as 32-bit two's complement, which matches an unsigned field for the usual
non-negative offsets.
"""

import io
import logging
import struct
from pathlib import Path
from typing import BinaryIO, Dict, Tuple, Union

from pydantic import ValidationError

from src.index.columns import AttributeColumn, column_kind
from src.index.k3lidar import IndexTopology, K3LidarIndex, LeafPayload
from src.models.attributes import (
    ATTRIBUTE_NAMES,
    AttributeKind,
    UnknownAttributeError,
    get_attribute,
)
from src.models.index import IndexConfig
from src.succinct import BitVector, DacSequence
from src.succinct.streams import read_struct, write_struct
from src.utils.logging_utils import log_function_call

logger = logging.getLogger(__name__)

MAGIC = b"K3L1"
FORMAT_VERSION = 1
HEADER = struct.Struct("<4sHBIB3i6d")


class IndexFormatError(ValueError):
    """Raised when bytes are not a readable index file."""


def write_index(index: K3LidarIndex, stream: BinaryIO) -> None:
    """Write an index to a binary stream."""
    config = index.config
    stream.write(
        HEADER.pack(
            MAGIC,
            FORMAT_VERSION,
            config.k,
            config.l,
            config.levels,
            *config.grid_offset,
            *config.las_scale,
            *config.las_offset,
        )
    )
    topology = index.topology
    for bits in (topology.t, topology.h, topology.n):
        bits.write_to(stream)

    payload = index.payload
    for sequence in (payload.x, payload.y, payload.z):
        sequence.write_to(stream)

    write_struct(stream, "<B", len(payload.columns))
    for name, column in payload.columns.items():
        spec = get_attribute(name)
        write_struct(stream, "<BB", spec.attribute_id, column_kind(column).code)
        column.write_to(stream)


def serialize(index: K3LidarIndex) -> bytes:
    """Encode an index as bytes; equal indexes give equal bytes."""
    buffer = io.BytesIO()
    write_index(index, buffer)
    return buffer.getvalue()


def serialized_size(index: K3LidarIndex) -> int:
    """Size in bytes of :func:`serialize` output, without encoding."""
    topology = index.topology
    payload = index.payload
    size = HEADER.size + 1
    size += sum(b.serialized_size for b in (topology.t, topology.h, topology.n))
    size += sum(s.serialized_size for s in (payload.x, payload.y, payload.z))
    size += sum(2 + column.serialized_size for column in payload.columns.values())
    return size


def _read_column(stream: BinaryIO) -> Tuple[str, AttributeColumn]:
    attribute_id, kind = read_struct(stream, "<BB", "column tag")
    try:
        spec = get_attribute(attribute_id)
    except UnknownAttributeError as e:
        raise IndexFormatError(f"Unknown attribute id {attribute_id} in index") from e

    if kind == AttributeKind.DAC.code:
        column: AttributeColumn = DacSequence.read_from(stream)
    elif kind == AttributeKind.BITMAP.code:
        column = BitVector.read_from(stream)
    else:
        raise IndexFormatError(f"Unknown column kind {kind} for {spec.name}")
    if column_kind(column) is not spec.kind:
        raise IndexFormatError(
            f"Column {spec.name} stored as {column_kind(column).value}, "
            f"expected {spec.kind.value}"
        )
    return spec.name, column


def _check_shape(topology: IndexTopology) -> None:
    children = topology.children_per_node
    t_length, h_length = len(topology.t), len(topology.h)
    if t_length % children:
        raise IndexFormatError(
            f"T has {t_length} bits, not a whole number of {children}-child groups"
        )
    if t_length == 0 and h_length == 1:
        return
    cells = children * (1 + topology.ones_in_t) - t_length
    expected = topology.zeros_in_t + cells
    if h_length != expected:
        raise IndexFormatError(
            f"H has {h_length} bits, expected {expected} "
            f"(zeros of T plus last-level cells)"
        )


def _check_counts(index: K3LidarIndex) -> None:
    topology = index.topology
    payload = index.payload
    _check_shape(topology)
    total = topology.point_count
    if not len(payload.x) == len(payload.y) == len(payload.z) <= total:
        raise IndexFormatError("Coordinate arrays have inconsistent lengths")
    for name, column in payload.columns.items():
        if len(column) != total:
            raise IndexFormatError(
                f"Column {name} has {len(column)} entries, expected {total}"
            )
    if topology.leaf_count != topology.h.count_ones:
        raise IndexFormatError(
            f"N holds {topology.leaf_count} leaves but H marks {topology.h.count_ones}"
        )


@log_function_call
def read_index(stream: BinaryIO) -> K3LidarIndex:
    """Read an index written by :func:`write_index`.

    Raises:
        IndexFormatError: On a bad magic, an unsupported version, a
            truncated stream or inconsistent contents
    """
    try:
        fields = read_struct(stream, HEADER.format, "index header")
        magic, version, k, l, levels = fields[:5]  # noqa: E741
        if magic != MAGIC:
            raise IndexFormatError(f"Bad magic {magic!r}, expected {MAGIC!r}")
        if version != FORMAT_VERSION:
            raise IndexFormatError(
                f"Unsupported index format version {version}, "
                f"expected {FORMAT_VERSION}"
            )
        config = IndexConfig(
            k=k,
            l=l,
            levels=levels,
            grid_offset=fields[5:8],
            las_scale=fields[8:11],
            las_offset=fields[11:14],
        )

        t, h, n = (BitVector.read_from(stream) for _ in range(3))
        x, y, z = (DacSequence.read_from(stream) for _ in range(3))
        (count,) = read_struct(stream, "<B", "column count")
        columns: Dict[str, AttributeColumn] = dict(
            _read_column(stream) for _ in range(count)
        )
    except IndexFormatError:
        raise
    except (ValueError, ValidationError) as e:
        raise IndexFormatError(f"Invalid index data: {e}") from e

    missing = [name for name in ATTRIBUTE_NAMES if name not in columns]
    if missing:
        raise IndexFormatError(f"Index is missing attribute columns: {missing}")
    columns = {name: columns[name] for name in ATTRIBUTE_NAMES}

    topology = IndexTopology(
        t=t, h=h, n=n, children_per_node=config.children_per_node
    )
    payload = LeafPayload(x=x, y=y, z=z, columns=columns)
    index = K3LidarIndex(config, topology, payload)
    _check_counts(index)
    return index


def deserialize(data: bytes) -> K3LidarIndex:
    """Decode bytes produced by :func:`serialize`."""
    return read_index(io.BytesIO(data))


def write_index_file(index: K3LidarIndex, path: Union[str, Path]) -> int:
    """Write an index file; returns its size in bytes."""
    data = serialize(index)
    Path(path).write_bytes(data)
    logger.info(f"Wrote index with {index.point_count} points to {path}")
    return len(data)


def read_index_file(path: Union[str, Path]) -> K3LidarIndex:
    """Read an index file from disk."""
    with open(path, "rb") as f:
        return read_index(f)
