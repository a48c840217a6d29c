"""Morton (z-order) ordering of grid points in base k.

A point's path through the tree is the sequence of child digits chosen at
every level, with ``digit = k*k*dx + k*dy + dz`` where ``dx, dy, dz`` are
the base-k digits of the coordinates at that level. Ordering points by this
path is the generalised Morton order with x as the most significant axis.
"""

from typing import List

import numpy as np


def child_digits(coords: np.ndarray, k: int, depth: int, levels: int) -> np.ndarray:
    """Child digit of every point at ``depth`` (0 is the root's children).

    Args:
        coords: (m, 3) integer grid coordinates
        k: Branching factor per axis
        depth: Tree depth whose children are selected
        levels: Tree height

    Returns:
        int64 array of digits in ``[0, k**3)``
    """
    side = k ** (levels - 1 - depth)
    digits = (np.asarray(coords, dtype=np.int64) // side) % k
    return (digits[:, 0] * k + digits[:, 1]) * k + digits[:, 2]


def digits_per_word(k: int) -> int:
    """How many base-k**3 digits fit in a non-negative int64."""
    children = k**3
    count = 1
    while children ** (count + 1) < 2**63:
        count += 1
    return count


def path_words(coords: np.ndarray, k: int, levels: int) -> List[np.ndarray]:
    """Pack the full digit path into uint64 words, most significant first."""
    children = k**3
    per_word = digits_per_word(k)
    words = []
    for first in range(0, levels, per_word):
        word = np.zeros(len(coords), dtype=np.uint64)
        for depth in range(first, min(first + per_word, levels)):
            digits = child_digits(coords, k, depth, levels).astype(np.uint64)
            word = word * np.uint64(children) + digits
        words.append(word)
    return words


def morton_order(coords: np.ndarray, k: int, levels: int) -> np.ndarray:
    """Stable permutation sorting points by Morton code.

    Ties keep input order, so duplicate points stay in insertion order.

    Example:
        >>> pts = np.array([[1, 1, 0], [0, 0, 0], [0, 0, 1]])
        >>> morton_order(pts, k=2, levels=1).tolist()
        [1, 2, 0]
    """
    coords = np.asarray(coords, dtype=np.int64).reshape(-1, 3)
    if len(coords) == 0:
        return np.zeros(0, dtype=np.int64)
    words = path_words(coords, k, levels)
    # lexsort treats the last key as primary
    keys = [np.arange(len(coords))] + words[::-1]
    return np.lexsort(keys)


def morton_code(x: int, y: int, z: int, k: int, levels: int) -> int:
    """Morton code of one point as a Python int.

    Example:
        >>> morton_code(5, 0, 0, k=2, levels=3)
        260
    """
    code = 0
    for depth in range(levels):
        side = k ** (levels - 1 - depth)
        digit = ((x // side) % k * k + (y // side) % k) * k + (z // side) % k
        code = code * k**3 + digit
    return code
