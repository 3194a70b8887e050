"""Conjugate array construction.

The conjugate array lists rotation start indices in lexicographic order of the
rotations, equal rotations ordered by start index. Two builders are provided: a naive
sort of every rotation, kept as the oracle, and cyclic prefix doubling on numpy arrays.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from bwtcat.config import resolve_builder
from bwtcat.core.symbols import WordLike, encode, require_word, sort_keys
from bwtcat.enums.ca_builder import CABuilder


@dataclass(frozen=True, eq=False)
class ConjugateArray:
    """Rotation order of a word.

    Attributes:
        order: Rotation start indices, int64, sorted by rotation then index
    """

    order: np.ndarray

    def __post_init__(self) -> None:
        self.order.setflags(write=False)

    def __len__(self) -> int:
        return int(self.order.shape[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConjugateArray):
            return NotImplemented
        return bool(np.array_equal(self.order, other.order))

    def __hash__(self) -> int:
        return hash(self.order.tobytes())

    def to_list(self) -> List[int]:
        """Return the order as a list of Python ints."""
        return [int(i) for i in self.order]


def naive_conjugate_array(ranks: np.ndarray) -> np.ndarray:
    """Sort every rotation of ``ranks`` as a full string.

    Args:
        ranks: Symbol ranks, see :mod:`bwtcat.core.symbols`

    Returns:
        The conjugate array as an int64 array.
    """
    n = int(ranks.shape[0])
    doubled = sort_keys(np.concatenate((ranks, ranks)))
    # two key bytes per symbol; the index breaks ties between equal rotations
    order = sorted(range(n), key=lambda i: (doubled[2 * i : 2 * (i + n)], i))
    return np.array(order, dtype=np.int64)


def doubling_conjugate_array(ranks: np.ndarray) -> np.ndarray:
    """Cyclic prefix doubling.

    After the round with step ``k``, ``cls[i]`` is the rank of the length-2k prefix of
    rotation ``i`` among all such prefixes and ``order`` lists rotations by ``cls``.
    Shifting ``order`` back by ``k`` lists rotations by their second half, so each round
    needs one stable sort on the first half only. Once the compared length reaches
    ``n`` the classes rank whole rotations; a final stable sort orders equal rotations
    by index.

    Args:
        ranks: Symbol ranks, see :mod:`bwtcat.core.symbols`

    Returns:
        The conjugate array as an int64 array.
    """
    n = int(ranks.shape[0])
    dtype = np.int32 if n < 1 << 31 else np.int64
    cls = np.unique(ranks, return_inverse=True)[1].astype(dtype).reshape(-1)
    order = np.argsort(_narrow(cls, int(cls.max()) + 1), kind="stable").astype(dtype)
    labels = cls[order]
    k = 1
    while k < n and int(labels[-1]) < n - 1:
        idx = order - k
        idx[idx < 0] += n
        first = cls[idx]
        perm = np.argsort(_narrow(first, int(labels[-1]) + 1), kind="stable")
        order = idx[perm]
        heads = first[perm]
        tails = labels[perm]
        fresh = np.empty(n, dtype=dtype)
        fresh[0] = 0
        boundary = (heads[1:] != heads[:-1]) | (tails[1:] != tails[:-1])
        np.cumsum(boundary, dtype=dtype, out=fresh[1:])
        labels = fresh
        cls = np.empty(n, dtype=dtype)
        cls[order] = labels
        k *= 2
    if int(labels[-1]) == n - 1:
        return order.astype(np.int64)
    return np.argsort(_narrow(cls, int(labels[-1]) + 1), kind="stable").astype(np.int64)


def _narrow(cls: np.ndarray, classes: int) -> np.ndarray:
    # numpy's stable sort is a radix sort for 16-bit keys
    return cls.astype(np.uint16) if classes <= 1 << 16 else cls


_BUILDERS = {
    CABuilder.NAIVE: naive_conjugate_array,
    CABuilder.DOUBLING: doubling_conjugate_array,
}


def build_order(ranks: np.ndarray, builder: Optional[CABuilder] = None) -> np.ndarray:
    """Build the conjugate array of a rank array with the selected builder."""
    chosen = resolve_builder(builder)
    logging.debug(f"Building conjugate array of length {ranks.shape[0]} with {chosen.value}")
    return _BUILDERS[chosen](ranks)


def conjugate_array(w: WordLike, builder: Optional[CABuilder] = None) -> ConjugateArray:
    """Compute the conjugate array of a word.

    Args:
        w: Non-empty word
        builder: CA builder; the environment decides when omitted

    Returns:
        The rotation order of ``w``.

    Raises:
        EmptyWordError: If ``w`` is empty.
    """
    word = require_word(w, "conjugate_array")
    return ConjugateArray(build_order(encode(word), builder))
