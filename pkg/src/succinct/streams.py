"""Little-endian binary stream helpers shared by the on-disk formats."""

import struct
from typing import BinaryIO, Tuple


class TruncatedStreamError(ValueError):
    """Raised when a stream ends before a structure is fully read."""

    def __init__(self, expected: int, got: int, what: str = "data"):
        self.expected = expected
        self.got = got
        super().__init__(
            f"Truncated stream while reading {what}: "
            f"expected {expected} bytes, got {got}"
        )


def read_exact(stream: BinaryIO, size: int, what: str = "data") -> bytes:
    """Read exactly ``size`` bytes or raise TruncatedStreamError."""
    data = stream.read(size)
    if len(data) != size:
        raise TruncatedStreamError(size, len(data), what)
    return data


def read_struct(stream: BinaryIO, fmt: str, what: str = "data") -> Tuple:
    """Read and unpack a struct from the stream."""
    return struct.unpack(fmt, read_exact(stream, struct.calcsize(fmt), what))


def write_struct(stream: BinaryIO, fmt: str, *values) -> None:
    stream.write(struct.pack(fmt, *values))
