"""Succinct building blocks: rank/select bitvectors and DAC integer sequences."""

from src.succinct.bitvector import BitVector
from src.succinct.dac import (
    DacSequence,
    choose_chunk_width,
    zigzag_decode,
    zigzag_encode,
)
from src.succinct.streams import TruncatedStreamError

__all__ = [
    "BitVector",
    "DacSequence",
    "TruncatedStreamError",
    "choose_chunk_width",
    "zigzag_decode",
    "zigzag_encode",
]
