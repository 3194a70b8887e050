"""Symbol ranks.

Words are byte strings. Internally every byte ``c`` is ranked ``c + 1`` so that rank 0
is free for the end-marker, which sorts below every byte and prints as ``$``.
"""

from typing import Union

import numpy as np

from bwtcat.errors import EmptyWordError, ReservedSymbolError
from bwtcat.validators.word_validator import SENTINEL_BYTE, WordValidator

SENTINEL = b"$"
SENTINEL_RANK = 0
RANK_DTYPE = np.uint16

WordLike = Union[bytes, bytearray, memoryview]

_validator = WordValidator()


def as_word(value: WordLike) -> bytes:
    """Normalise a bytes-like value to ``bytes``.

    Raises:
        TypeError: If ``value`` is a ``str`` or not bytes-like.
    """
    if isinstance(value, bytes):
        return value
    if isinstance(value, (bytearray, memoryview)):
        return bytes(value)
    raise TypeError(f"words are bytes, got {type(value).__name__}")


def require_word(value: WordLike, operation: str) -> bytes:
    """Normalise ``value`` and reject the empty word."""
    word = as_word(value)
    if not _validator.validate(word):
        raise EmptyWordError(operation)
    return word


def require_dollar_free(value: WordLike) -> bytes:
    """Normalise ``value`` and reject words containing the reserved byte."""
    word = as_word(value)
    if not _validator.validate_dollar_free(word):
        raise ReservedSymbolError(
            f"Provided value is not a valid end-marker input, it contains {SENTINEL!r}: "
            f"{word[:32]!r}"
        )
    return word


def encode(word: bytes, *, sentinel: bool = False) -> np.ndarray:
    """Rank the symbols of ``word``, optionally followed by the end-marker."""
    ranks = np.frombuffer(word, dtype=np.uint8).astype(RANK_DTYPE) + 1
    if sentinel:
        ranks = np.append(ranks, np.array([SENTINEL_RANK], dtype=RANK_DTYPE))
    return ranks


def encode_prefix(prefix: bytes, *, sentinel: bool) -> np.ndarray:
    """Rank a block prefix; with ``sentinel`` the byte ``$`` means the end-marker."""
    ranks = encode(prefix)
    if sentinel:
        ranks[ranks == SENTINEL_BYTE + 1] = SENTINEL_RANK
    return ranks


def decode(ranks: np.ndarray) -> bytes:
    """Inverse of :func:`encode`; the end-marker rank becomes ``$``."""
    out = (ranks.astype(np.int32) - 1).astype(np.uint8)
    out[ranks == SENTINEL_RANK] = SENTINEL_BYTE
    return out.tobytes()


def sort_keys(ranks: np.ndarray) -> bytes:
    """Big-endian two-byte encoding whose byte order equals rank order."""
    return ranks.astype(">u2").tobytes()
