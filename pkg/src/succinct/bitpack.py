"""Fixed-width integer packing.

Values are laid out back to back, ``width`` bits each, least significant bit
first within each byte. This is the chunk layout used for DAC levels.
"""

import numpy as np

MAX_WIDTH = 32


def packed_size(count: int, width: int) -> int:
    """Number of bytes needed for ``count`` values of ``width`` bits."""
    return (count * width + 7) // 8


def pack_fixed_width(values: np.ndarray, width: int) -> bytes:
    """Pack unsigned integers into ``width``-bit slots.

    Args:
        values: Unsigned integers, each < 2**width
        width: Slot width in bits (1-32)

    Returns:
        Packed bytes, zero-padded to a byte boundary
    """
    if not 1 <= width <= MAX_WIDTH:
        raise ValueError(f"width must be in [1, {MAX_WIDTH}], got {width}")
    values = np.asarray(values)
    if values.size == 0:
        return b""
    as_bytes = values.astype("<u4").view(np.uint8).reshape(-1, 4)
    bits = np.unpackbits(as_bytes, axis=1, bitorder="little")[:, :width]
    return np.packbits(bits.ravel(), bitorder="little").tobytes()


def unpack_fixed_width(raw: bytes, count: int, width: int) -> np.ndarray:
    """Inverse of :func:`pack_fixed_width`; returns a uint32 array."""
    if not 1 <= width <= MAX_WIDTH:
        raise ValueError(f"width must be in [1, {MAX_WIDTH}], got {width}")
    if count == 0:
        return np.zeros(0, dtype=np.uint32)
    buffer = np.frombuffer(raw, dtype=np.uint8)
    bits = np.unpackbits(buffer, count=count * width, bitorder="little")
    padded = np.zeros((count, MAX_WIDTH), dtype=np.uint8)
    padded[:, :width] = bits.reshape(count, width)
    return np.packbits(padded, axis=1, bitorder="little").view("<u4").ravel().astype(
        np.uint32
    )
