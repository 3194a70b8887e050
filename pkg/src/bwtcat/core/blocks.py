"""BWT blocks by rotation prefix.

The block of a prefix ``x`` is the contiguous slice of the BWT covering the rotations
that start with ``x``. Rotations sharing a prefix are adjacent in the conjugate array,
so each block is found with two binary searches.
"""

from bisect import bisect_left, bisect_right
from typing import Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from bwtcat.core.conjugate_array import build_order
from bwtcat.core.symbols import (
    WordLike,
    decode,
    encode,
    encode_prefix,
    require_dollar_free,
    require_word,
    sort_keys,
)
from bwtcat.core.transform import last_column
from bwtcat.enums.ca_builder import CABuilder


class BlockQuery(BaseModel):
    """A rotation prefix selecting one BWT block.

    Attributes:
        prefix: Non-empty prefix; in the end-marker variant ``$`` denotes the sentinel
    """

    model_config = ConfigDict(frozen=True)

    prefix: bytes = Field(min_length=1)


QueryLike = Union[BlockQuery, bytes]


class BlockIndex:
    """Answers block queries on one word after a single CA construction.

    Attributes:
        dollar: Whether the indexed text is ``w$`` rather than ``w``
    """

    def __init__(
        self,
        w: WordLike,
        dollar: bool = False,
        builder: Optional[CABuilder] = None,
    ) -> None:
        word = require_dollar_free(w) if dollar else require_word(w, "bwt_block")
        self.dollar = dollar
        self._ranks = encode(word, sentinel=dollar)
        self._order = build_order(self._ranks, builder)
        self._column = last_column(self._ranks, self._order)

    @property
    def bwt(self) -> bytes:
        """The full transform of the indexed text."""
        return decode(self._column)

    def block(self, query: QueryLike) -> bytes:
        """Return the BWT block of the rotations prefixed by ``query``.

        Args:
            query: A BlockQuery or its raw prefix

        Returns:
            The block, empty when no rotation has the prefix.
        """
        if not isinstance(query, BlockQuery):
            query = BlockQuery(prefix=query)
        target_ranks = encode_prefix(query.prefix, sentinel=self.dollar)
        n = self._ranks.shape[0]
        m = target_ranks.shape[0]
        # enough copies that every rotation prefix of length m is a plain slice
        text = sort_keys(np.tile(self._ranks, m // n + 2))
        target = sort_keys(target_ranks)
        order = self._order

        def prefix_of(row: int) -> bytes:
            start = 2 * int(order[row])
            return text[start : start + 2 * m]

        lo = bisect_left(range(n), target, key=prefix_of)
        hi = bisect_right(range(n), target, key=prefix_of)
        return decode(self._column[lo:hi])


def bwt_block(
    w: WordLike, q: QueryLike, builder: Optional[CABuilder] = None
) -> bytes:
    """Block of ``bwt(w)`` for the rotations of ``w`` prefixed by ``q``."""
    return BlockIndex(w, dollar=False, builder=builder).block(q)


def bwt_block_dollar(
    w: WordLike, q: QueryLike, builder: Optional[CABuilder] = None
) -> bytes:
    """Block of ``bwt_dollar(w)`` for the rotations of ``w$`` prefixed by ``q``."""
    return BlockIndex(w, dollar=True, builder=builder).block(q)
