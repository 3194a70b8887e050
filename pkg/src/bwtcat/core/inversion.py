"""Inversion of both BWT variants through the LF mapping.

Row ``i`` of the sorted rotation matrix ends with ``t[i]``; ``lf[i]`` is the row of the
rotation that starts with that symbol. Following ``lf`` spells a word backwards.
"""

import logging
from typing import List, Optional

import numpy as np

from bwtcat.core.symbols import (
    SENTINEL,
    SENTINEL_RANK,
    WordLike,
    as_word,
    decode,
    encode,
    encode_prefix,
    require_word,
)
from bwtcat.core.transform import bwt
from bwtcat.core.words import least_rotation
from bwtcat.enums.ca_builder import CABuilder
from bwtcat.errors import NotABwtImageError, SentinelCountError


def lf_mapping(ranks: np.ndarray) -> np.ndarray:
    """LF mapping of a last column given as ranks."""
    n = ranks.shape[0]
    lf = np.empty(n, dtype=np.int64)
    lf[np.argsort(ranks, kind="stable")] = np.arange(n, dtype=np.int64)
    return lf


def lf_cycles(lf: np.ndarray) -> List[List[int]]:
    """Decompose the LF permutation into cycles, each listed from its smallest row."""
    seen = np.zeros(lf.shape[0], dtype=bool)
    cycles: List[List[int]] = []
    for start in range(lf.shape[0]):
        if seen[start]:
            continue
        cycle = []
        row = start
        while not seen[row]:
            seen[row] = True
            cycle.append(row)
            row = int(lf[row])
        cycles.append(cycle)
    return cycles


def inverse_bwt(t: WordLike, builder: Optional[CABuilder] = None) -> bytes:
    """Recover the least rotation of a word from its rotation BWT.

    The LF permutation of ``bwt(u ** e)`` with ``u`` primitive splits into ``e`` cycles
    of length ``len(u)``; one cycle spells a rotation of ``u``.

    Args:
        t: Non-empty candidate BWT
        builder: CA builder used for the reconstruction check

    Returns:
        The least rotation of a word whose BWT is ``t``.

    Raises:
        EmptyWordError: If ``t`` is empty.
        NotABwtImageError: If no word has ``t`` as its BWT.
    """
    column = require_word(t, "inverse_bwt")
    ranks = encode(column)
    cycles = lf_cycles(lf_mapping(ranks))
    lengths = {len(cycle) for cycle in cycles}
    if len(lengths) != 1:
        raise NotABwtImageError(f"LF cycles of unequal length {sorted(lengths)}")
    first = cycles[0]
    # rows of one cycle visit the preceding symbols in reverse text order
    spelled = decode(ranks[np.array(first[::-1], dtype=np.int64)])
    candidate = least_rotation(spelled, builder) * len(cycles)
    if bwt(candidate, builder).bwt != column:
        logging.debug(f"Reconstruction {candidate[:32]!r} does not transform back")
        raise NotABwtImageError("mismatched reconstruction")
    return candidate


def inverse_bwt_dollar(t: WordLike) -> bytes:
    """Recover ``w`` from the BWT of ``w$``.

    Args:
        t: Candidate BWT holding exactly one ``$``

    Returns:
        The word ``w`` with ``bwt_dollar(w).bwt == t``.

    Raises:
        SentinelCountError: If ``t`` does not contain exactly one ``$``.
        NotABwtImageError: If ``t`` is not the BWT of any ``w$``.
    """
    column = as_word(t)
    markers = column.count(SENTINEL)
    if markers != 1:
        raise SentinelCountError(f"expected exactly one {SENTINEL!r}, found {markers}")
    ranks = encode_prefix(column, sentinel=True)
    lf = lf_mapping(ranks)
    n = ranks.shape[0]
    out = np.empty(n - 1, dtype=ranks.dtype)
    row = 0
    # row 0 is the rotation starting with the end-marker
    for pos in range(n - 2, -1, -1):
        out[pos] = ranks[row]
        row = int(lf[row])
    closed = ranks[row] == SENTINEL_RANK and int(lf[row]) == 0
    if not closed or bool((out == SENTINEL_RANK).any()):
        raise NotABwtImageError("LF walk does not close at the end-marker")
    return decode(out)
