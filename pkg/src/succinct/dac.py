"""Directly Addressable Codes.

Each value is cut into ``b``-bit chunks, least significant chunk first. Level
``t`` holds the ``t``-th chunk of every value that has one; a continuation
bitmap per level marks the values that go on to the next level, and
``rank1`` on that bitmap gives their position there. The last level has no
bitmap.
"""

import logging
import struct
from dataclasses import dataclass
from typing import BinaryIO, List, Optional, Sequence, Union

import numpy as np

from src.succinct.bitpack import pack_fixed_width, packed_size, unpack_fixed_width
from src.succinct.bitvector import BitVector
from src.succinct.streams import read_exact, read_struct

logger = logging.getLogger(__name__)

CANDIDATE_WIDTHS = (2, 4, 8, 16)

ValuesLike = Union[np.ndarray, Sequence[int]]


def _chunk_dtype(width: int) -> np.dtype:
    if width <= 8:
        return np.dtype(np.uint8)
    if width <= 16:
        return np.dtype(np.uint16)
    return np.dtype(np.uint32)


def _as_unsigned(values: ValuesLike) -> np.ndarray:
    array = np.asarray(values)
    if array.size == 0:
        return np.zeros(0, dtype=np.uint64)
    if array.dtype == object:
        if min(int(v) for v in array.ravel()) < 0:
            raise ValueError("DAC values must be non-negative")
        return np.array([int(v) for v in array.ravel()], dtype=np.uint64)
    if array.dtype.kind not in "iub":
        raise ValueError(f"DAC values must be integers, got dtype {array.dtype}")
    if array.dtype.kind == "i" and array.min() < 0:
        raise ValueError("DAC values must be non-negative")
    return array.astype(np.uint64)


def bit_lengths(values: ValuesLike) -> np.ndarray:
    """Bit length of each value (0 for 0)."""
    array = _as_unsigned(values)
    lengths = np.zeros(array.size, dtype=np.int64)
    remaining = array.copy()
    # Binary descent keeps this exact for the full uint64 range.
    for shift in (32, 16, 8, 4, 2, 1):
        big = remaining >= (np.uint64(1) << np.uint64(shift))
        lengths[big] += shift
        remaining[big] >>= np.uint64(shift)
    lengths += (remaining > 0).astype(np.int64)
    return lengths


def encoded_size_bits(length_histogram: np.ndarray, width: int) -> int:
    """Exact payload size in bits for a chunk width.

    Args:
        length_histogram: ``hist[L]`` = number of values with bit length L
        width: Chunk width

    Returns:
        Chunk bits plus continuation bits
    """
    lengths = np.arange(length_histogram.size)
    chunks = np.maximum(1, -(-lengths // width))
    chunk_bits = int((length_histogram * chunks).sum()) * width
    depth = int(chunks[length_histogram > 0].max()) if length_histogram.any() else 0
    continuation_bits = 0
    for level in range(depth - 1):
        continuation_bits += int(length_histogram[chunks > level].sum())
    return chunk_bits + continuation_bits


def choose_chunk_width(values: ValuesLike) -> int:
    """Pick the width in {2, 4, 8, 16} giving the smallest encoding.

    Ties go to the smaller width.

    Example:
        >>> choose_chunk_width([0, 1, 3])
        2
    """
    lengths = bit_lengths(values)
    if lengths.size == 0:
        return CANDIDATE_WIDTHS[0]
    histogram = np.bincount(lengths, minlength=1)
    sizes = [encoded_size_bits(histogram, width) for width in CANDIDATE_WIDTHS]
    return CANDIDATE_WIDTHS[int(np.argmin(sizes))]


def zigzag_encode(values: ValuesLike) -> np.ndarray:
    """Map signed integers to unsigned: v >= 0 -> 2v, v < 0 -> -2v - 1."""
    array = np.asarray(values, dtype=np.int64)
    return np.where(array >= 0, 2 * array, -2 * array - 1).astype(np.uint64)


def zigzag_decode(values: ValuesLike) -> np.ndarray:
    array = np.asarray(values, dtype=np.int64)
    return np.where(array % 2 == 0, array // 2, -(array + 1) // 2)


@dataclass(frozen=True)
class DacLevel:
    """Chunks of one level and the bitmap of values continuing below it."""

    chunks: np.ndarray
    continuation: Optional[BitVector] = None


class DacSequence:
    """Immutable integer sequence with random access.

    Example:
        >>> seq = DacSequence.encode([5, 0, 7], chunk_width=3)
        >>> seq.access(2)
        7
    """

    def __init__(self, levels: List[DacLevel], chunk_width: int, length: int):
        if not 1 <= chunk_width <= 32:
            raise ValueError(f"chunk width must be in [1, 32], got {chunk_width}")
        self._levels = levels
        self._width = chunk_width
        self._length = length

    @classmethod
    def encode(
        cls, values: ValuesLike, chunk_width: Optional[int] = None
    ) -> "DacSequence":
        """Encode non-negative integers.

        Args:
            values: Values to encode
            chunk_width: Bits per chunk; chosen with choose_chunk_width if omitted

        Returns:
            The encoded sequence
        """
        array = _as_unsigned(values)
        if chunk_width is None:
            chunk_width = choose_chunk_width(array)
        if not 1 <= chunk_width <= 32:
            raise ValueError(f"chunk width must be in [1, 32], got {chunk_width}")

        dtype = _chunk_dtype(chunk_width)
        mask = np.uint64((1 << chunk_width) - 1)
        shift = np.uint64(chunk_width)

        levels: List[DacLevel] = []
        remaining = array
        while True:
            chunks = (remaining & mask).astype(dtype)
            remaining = remaining >> shift
            more = remaining > 0
            if not more.any():
                levels.append(DacLevel(chunks))
                break
            levels.append(DacLevel(chunks, BitVector(more)))
            remaining = remaining[more]

        logger.debug(
            f"Encoded {array.size} values with chunk width {chunk_width} "
            f"into {len(levels)} level(s)"
        )
        return cls(levels, chunk_width, int(array.size))

    # ------------------------------------------------------------------ basics

    def __len__(self) -> int:
        return self._length

    def __getitem__(self, i: int) -> int:
        return self.access(i)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DacSequence):
            return NotImplemented
        if (self._width, self._length, len(self._levels)) != (
            other._width,
            other._length,
            len(other._levels),
        ):
            return False
        return all(
            np.array_equal(a.chunks, b.chunks) and a.continuation == b.continuation
            for a, b in zip(self._levels, other._levels)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"DacSequence(length={self._length}, chunk_width={self._width}, "
            f"levels={len(self._levels)})"
        )

    @property
    def chunk_width(self) -> int:
        return self._width

    @property
    def levels(self) -> List[DacLevel]:
        return list(self._levels)

    @property
    def level_count(self) -> int:
        return len(self._levels)

    @property
    def nbytes(self) -> int:
        """In-memory size of chunks and continuation bitmaps."""
        total = 0
        for level in self._levels:
            total += packed_size(level.chunks.size, self._width)
            if level.continuation is not None:
                total += level.continuation.nbytes
        return total

    # ------------------------------------------------------------- operations

    def access(self, i: int) -> int:
        """Return the value at position ``i``."""
        if not 0 <= i < self._length:
            raise IndexError(f"DAC index {i} out of range [0, {self._length})")
        value = 0
        shift = 0
        position = i
        for level in self._levels:
            value |= int(level.chunks[position]) << shift
            bitmap = level.continuation
            if bitmap is None or not bitmap.access(position):
                break
            position = bitmap.rank1(position)
            shift += self._width
        return value

    def access_many(self, positions: np.ndarray) -> np.ndarray:
        """Vectorised :meth:`access`; returns uint64 values."""
        positions = np.asarray(positions, dtype=np.int64)
        if positions.size and (positions.min() < 0 or positions.max() >= self._length):
            raise IndexError(f"DAC positions out of range [0, {self._length})")
        if positions.size == 0:
            return np.zeros(0, dtype=np.uint64)

        values = self._levels[0].chunks[positions].astype(np.uint64)
        slots = np.arange(positions.size)
        shift = 0
        for depth, level in enumerate(self._levels):
            if depth:
                chunk = level.chunks[positions].astype(np.uint64)
                values[slots] |= chunk << np.uint64(shift)
            bitmap = level.continuation
            if bitmap is None:
                break
            more = bitmap.access_many(positions).astype(bool)
            if not more.any():
                break
            positions = bitmap.rank1_many(positions[more])
            slots = slots[more]
            shift += self._width
        return values

    def decode_all(self) -> np.ndarray:
        """Decode the whole sequence as uint64."""
        if self._length == 0:
            return np.zeros(0, dtype=np.uint64)
        values = self._levels[0].chunks.astype(np.uint64)
        slots = np.arange(self._length)
        shift = 0
        for depth, level in enumerate(self._levels):
            if depth:
                values[slots] |= level.chunks.astype(np.uint64) << np.uint64(shift)
            if level.continuation is None:
                break
            slots = slots[level.continuation.to_numpy().astype(bool)]
            shift += self._width
        return values

    # --------------------------------------------------------- serialization

    def write_to(self, stream: BinaryIO) -> None:
        """Write length, chunk width, level count and every level."""
        stream.write(struct.pack("<QBB", self._length, self._width, len(self._levels)))
        for level in self._levels:
            stream.write(struct.pack("<Q", level.chunks.size))
            stream.write(pack_fixed_width(level.chunks, self._width))
            if level.continuation is not None:
                level.continuation.write_to(stream)

    @classmethod
    def read_from(cls, stream: BinaryIO) -> "DacSequence":
        length, width, level_count = read_struct(stream, "<QBB", "DAC header")
        if not 1 <= width <= 32:
            raise ValueError(f"Invalid DAC chunk width {width}")
        if level_count == 0:
            raise ValueError("DAC sequence must have at least one level")
        dtype = _chunk_dtype(width)
        levels: List[DacLevel] = []
        for depth in range(level_count):
            (count,) = read_struct(stream, "<Q", "DAC level size")
            raw = read_exact(stream, packed_size(count, width), "DAC chunks")
            chunks = unpack_fixed_width(raw, count, width).astype(dtype)
            continuation = None
            if depth < level_count - 1:
                continuation = BitVector.read_from(stream)
            levels.append(DacLevel(chunks, continuation))
        if levels[0].chunks.size != length:
            raise ValueError(
                f"DAC level 0 holds {levels[0].chunks.size} chunks, expected {length}"
            )
        return cls(levels, width, length)

    @property
    def serialized_size(self) -> int:
        size = 10
        for level in self._levels:
            size += 8 + packed_size(level.chunks.size, self._width)
            if level.continuation is not None:
                size += level.continuation.serialized_size
        return size
