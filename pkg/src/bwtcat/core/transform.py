"""Burrows-Wheeler transforms and run statistics.

``bwt`` sorts the rotations of ``w`` itself; ``bwt_dollar`` sorts the rotations of
``w$`` where ``$`` is a sentinel below every byte. Because the sentinel is unique and
minimal, the rotation order of ``w$`` is the suffix order of ``w$``.
"""

from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from bwtcat.core.conjugate_array import build_order
from bwtcat.core.symbols import (
    WordLike,
    decode,
    encode,
    require_dollar_free,
    require_word,
)
from bwtcat.enums.ca_builder import CABuilder


class RunLength(BaseModel):
    """One maximal run of equal symbols.

    Attributes:
        symbol: The repeated symbol, a single byte (``$`` for the end-marker)
        length: Number of repetitions
    """

    model_config = ConfigDict(frozen=True)

    symbol: bytes = Field(min_length=1, max_length=1)
    length: int = Field(ge=1)


class Transform(BaseModel):
    """Output of a BWT together with its run-length encoding.

    Attributes:
        bwt: The transformed word; the end-marker variant holds exactly one ``$``
        rle: Maximal runs of ``bwt`` in order
        sentinel_index: Position of the end-marker, None for the rotation variant
    """

    model_config = ConfigDict(frozen=True)

    bwt: bytes
    rle: Tuple[RunLength, ...]
    sentinel_index: Optional[int] = Field(default=None, ge=0)

    @computed_field
    @property
    def run_count(self) -> int:
        """Number of equal-letter runs, r or r_$ of the input."""
        return len(self.rle)

    @model_validator(mode="after")
    def check_runs_cover_bwt(self) -> "Transform":
        """Ensure the run lengths add up to the transformed word."""
        if sum(run.length for run in self.rle) != len(self.bwt):
            raise ValueError("run lengths do not cover the transformed word")
        return self


def count_runs(ranks: np.ndarray) -> int:
    """Number of maximal equal runs of a non-empty rank array."""
    return 1 + int(np.count_nonzero(ranks[1:] != ranks[:-1]))


def encode_runs(ranks: np.ndarray) -> Tuple[RunLength, ...]:
    """Run-length encode a non-empty rank array."""
    starts = np.concatenate(([0], np.flatnonzero(ranks[1:] != ranks[:-1]) + 1))
    lengths = np.diff(np.append(starts, ranks.shape[0]))
    symbols = decode(ranks[starts])
    return tuple(
        RunLength(symbol=symbols[j : j + 1], length=int(length))
        for j, length in enumerate(lengths)
    )


def last_column(ranks: np.ndarray, order: np.ndarray) -> np.ndarray:
    """Symbol cyclically preceding each rotation in ``order``."""
    return ranks[(order - 1) % ranks.shape[0]]


def _to_transform(column: np.ndarray, sentinel: bool) -> Transform:
    index = int(np.flatnonzero(column == 0)[0]) if sentinel else None
    return Transform(bwt=decode(column), rle=encode_runs(column), sentinel_index=index)


def bwt(w: WordLike, builder: Optional[CABuilder] = None) -> Transform:
    """Rotation Burrows-Wheeler transform.

    Args:
        w: Non-empty word
        builder: CA builder; the environment decides when omitted

    Returns:
        The transform with its run-length encoding.

    Raises:
        EmptyWordError: If ``w`` is empty.
    """
    ranks = encode(require_word(w, "bwt"))
    return _to_transform(last_column(ranks, build_order(ranks, builder)), sentinel=False)


def bwt_dollar(w: WordLike, builder: Optional[CABuilder] = None) -> Transform:
    """End-marker Burrows-Wheeler transform, the BWT of ``w$``.

    Args:
        w: Word, possibly empty, not containing the byte ``$``
        builder: CA builder; the environment decides when omitted

    Returns:
        The transform; ``bwt`` contains exactly one ``$``.

    Raises:
        ReservedSymbolError: If ``w`` contains ``$``.
    """
    ranks = encode(require_dollar_free(w), sentinel=True)
    return _to_transform(last_column(ranks, build_order(ranks, builder)), sentinel=True)


def runs(v: WordLike) -> int:
    """Number of maximal equal-letter runs of a non-empty word."""
    return count_runs(encode(require_word(v, "runs")))


def rle(v: WordLike) -> List[RunLength]:
    """Run-length encoding of a non-empty word."""
    return list(encode_runs(encode(require_word(v, "rle"))))


def r(w: WordLike, builder: Optional[CABuilder] = None) -> int:
    """Runs of the rotation BWT of ``w``; undefined (error) for the empty word."""
    ranks = encode(require_word(w, "r"))
    return count_runs(last_column(ranks, build_order(ranks, builder)))


def r_dollar(w: WordLike, builder: Optional[CABuilder] = None) -> int:
    """Runs of the BWT of ``w$``; equals 1 for the empty word."""
    ranks = encode(require_dollar_free(w), sentinel=True)
    return count_runs(last_column(ranks, build_order(ranks, builder)))
