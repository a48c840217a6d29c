"""Plain bit sequence with rank and select support.

Bits are stored LSB-first within bytes. The rank directory has two levels:
an absolute count every 65536 bits and a 16-bit count relative to that
superblock every 128 bits (12.5% extra space). select binary-searches the
directory and finishes with a scan of one 128-bit block.

All positions are 0-based. ``rank1(i)`` counts the 1-bits in ``[0, i)`` and
``select1(j)`` returns the position of the ``j``-th 1-bit (``j`` 1-based).
"""

import struct
from typing import BinaryIO, Iterable, Iterator, Union

import numpy as np

from src.succinct.streams import read_exact, read_struct

BLOCK_BITS = 128
BLOCK_BYTES = BLOCK_BITS // 8
BLOCKS_PER_SUPERBLOCK = 512

BitsLike = Union[str, np.ndarray, Iterable[int]]


def _as_bit_array(bits: BitsLike) -> np.ndarray:
    if isinstance(bits, str):
        if any(c not in "01" for c in bits):
            raise ValueError(f"Bit string may only contain '0' and '1': {bits!r}")
        return np.frombuffer(bits.encode("ascii"), dtype=np.uint8) - ord("0")
    if isinstance(bits, np.ndarray):
        return (bits != 0).astype(np.uint8)
    return np.fromiter((1 if b else 0 for b in bits), dtype=np.uint8)


class BitVector:
    """Immutable bit sequence answering access, rank and select.

    Example:
        >>> bv = BitVector("10110")
        >>> bv.rank1(3), bv.rank0(5), bv.select1(3)
        (2, 2, 3)
    """

    __slots__ = ("_n", "_raw", "_words", "_super", "_rel", "_ones")

    def __init__(self, bits: BitsLike = ()):
        array = _as_bit_array(bits)
        packed = np.packbits(array, bitorder="little").tobytes()
        self._load(packed, int(array.size))

    @classmethod
    def from_packed(cls, raw: bytes, n_bits: int) -> "BitVector":
        """Build from LSB-first packed bytes holding ``n_bits`` bits."""
        if len(raw) < (n_bits + 7) // 8:
            raise ValueError(f"{len(raw)} bytes cannot hold {n_bits} bits")
        instance = cls.__new__(cls)
        instance._load(raw, n_bits)
        return instance

    def _load(self, raw: bytes, n_bits: int) -> None:
        used = (n_bits + 7) // 8
        total = (used // BLOCK_BYTES + 1) * BLOCK_BYTES
        buffer = bytearray(total)
        buffer[:used] = raw[:used]
        if n_bits % 8:
            buffer[used - 1] &= (1 << (n_bits % 8)) - 1

        self._n = n_bits
        self._raw = bytes(buffer)
        self._words = np.frombuffer(self._raw, dtype="<u8")

        per_block = np.bitwise_count(self._words).astype(np.int64).reshape(-1, 2)
        block_counts = per_block.sum(axis=1)
        before = np.zeros(block_counts.size, dtype=np.int64)
        np.cumsum(block_counts[:-1], out=before[1:])

        self._super = before[::BLOCKS_PER_SUPERBLOCK].copy()
        base = np.repeat(self._super, BLOCKS_PER_SUPERBLOCK)[: before.size]
        self._rel = (before - base).astype(np.uint16)
        self._ones = int(before[-1] + block_counts[-1])

    # ------------------------------------------------------------------ basics

    def __len__(self) -> int:
        return self._n

    def __iter__(self) -> Iterator[int]:
        return iter(self.to_numpy().tolist())

    def __getitem__(self, i: int) -> int:
        return self.access(i)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self._n == other._n and self._raw == other._raw

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        if self._n <= 64:
            return f"BitVector('{self.to_string()}')"
        return f"BitVector(n_bits={self._n}, ones={self._ones})"

    @property
    def count_ones(self) -> int:
        """Total number of 1-bits, i.e. ``rank1(len(self))``."""
        return self._ones

    @property
    def count_zeros(self) -> int:
        return self._n - self._ones

    @property
    def nbytes(self) -> int:
        """In-memory size: packed bits plus rank directory."""
        return (self._n + 7) // 8 + self._rel.nbytes + self._super.nbytes

    def to_numpy(self) -> np.ndarray:
        """All bits as a uint8 array of 0/1."""
        return np.unpackbits(
            np.frombuffer(self._raw, dtype=np.uint8), count=self._n, bitorder="little"
        )

    def to_string(self) -> str:
        return "".join("1" if b else "0" for b in self.to_numpy())

    # ------------------------------------------------------------- operations

    def access(self, i: int) -> int:
        """Return the bit at position ``i``."""
        if not 0 <= i < self._n:
            raise IndexError(f"bit index {i} out of range [0, {self._n})")
        return (self._raw[i >> 3] >> (i & 7)) & 1

    def rank1(self, i: int) -> int:
        """Number of 1-bits in positions ``[0, i)``."""
        if not 0 <= i <= self._n:
            raise IndexError(f"rank position {i} out of range [0, {self._n}]")
        block = i >> 7
        count = int(self._super[block >> 9]) + int(self._rel[block])
        start = block << 4
        end = (i + 7) >> 3
        if end > start:
            chunk = int.from_bytes(self._raw[start:end], "little")
            chunk &= (1 << (i - (start << 3))) - 1
            count += chunk.bit_count()
        return count

    def rank0(self, i: int) -> int:
        """Number of 0-bits in positions ``[0, i)``."""
        return i - self.rank1(i)

    def select1(self, j: int) -> int:
        """Position of the ``j``-th 1-bit (``j`` is 1-based)."""
        if not 1 <= j <= self._ones:
            raise IndexError(f"select ordinal {j} out of range [1, {self._ones}]")
        superblock = int(np.searchsorted(self._super, j, side="left")) - 1
        remaining = j - int(self._super[superblock])
        first = superblock * BLOCKS_PER_SUPERBLOCK
        rel = self._rel[first : first + BLOCKS_PER_SUPERBLOCK]
        block = first + int(np.searchsorted(rel, remaining, side="left")) - 1
        remaining -= int(self._rel[block])

        start = block * BLOCK_BYTES
        chunk = int.from_bytes(self._raw[start : start + BLOCK_BYTES], "little")
        for _ in range(remaining - 1):
            chunk &= chunk - 1
        return block * BLOCK_BITS + (chunk & -chunk).bit_length() - 1

    # -------------------------------------------------------- batch variants

    def access_many(self, positions: np.ndarray) -> np.ndarray:
        """Vectorised :meth:`access`; returns uint8 bits."""
        positions = np.asarray(positions, dtype=np.int64)
        if positions.size and (positions.min() < 0 or positions.max() >= self._n):
            raise IndexError(f"bit positions out of range [0, {self._n})")
        shifts = (positions & 63).astype(np.uint64)
        words = self._words[positions >> 6]
        return ((words >> shifts) & np.uint64(1)).astype(np.uint8)

    def rank1_many(self, positions: np.ndarray) -> np.ndarray:
        """Vectorised :meth:`rank1`; returns int64 counts."""
        positions = np.asarray(positions, dtype=np.int64)
        if positions.size and (positions.min() < 0 or positions.max() > self._n):
            raise IndexError(f"rank positions out of range [0, {self._n}]")
        blocks = positions >> 7
        counts = self._super[blocks >> 9] + self._rel[blocks].astype(np.int64)

        word_index = positions >> 6
        odd = (word_index & 1) == 1
        if odd.any():
            counts[odd] += np.bitwise_count(self._words[word_index[odd] - 1])

        shifts = (positions & 63).astype(np.uint64)
        masks = (np.uint64(1) << shifts) - np.uint64(1)
        counts += np.bitwise_count(self._words[word_index] & masks)
        return counts

    # --------------------------------------------------------- serialization

    def write_to(self, stream: BinaryIO) -> None:
        """Write bit length (u64) and the packed bits."""
        stream.write(struct.pack("<Q", self._n))
        stream.write(self._raw[: (self._n + 7) // 8])

    @classmethod
    def read_from(cls, stream: BinaryIO) -> "BitVector":
        """Read a bitvector written by :meth:`write_to`; directory is rebuilt."""
        (n_bits,) = read_struct(stream, "<Q", "bitvector length")
        raw = read_exact(stream, (n_bits + 7) // 8, "bitvector bits")
        return cls.from_packed(raw, n_bits)

    @property
    def serialized_size(self) -> int:
        return 8 + (self._n + 7) // 8
