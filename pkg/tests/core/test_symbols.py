"""Tests for symbol ranking."""

import numpy as np
import pytest

from bwtcat.core.symbols import (
    SENTINEL_RANK,
    as_word,
    decode,
    encode,
    encode_prefix,
    require_dollar_free,
    sort_keys,
)
from bwtcat.errors import ReservedSymbolError


def test_encode_shifts_bytes() -> None:
    """Test that byte c has rank c + 1 and the sentinel rank 0."""
    ranks = encode(b"\x00a\xff", sentinel=True)
    assert ranks.tolist() == [1, 98, 256, SENTINEL_RANK]


def test_decode_prints_sentinel_as_dollar() -> None:
    """Test that the sentinel rank decodes to ``$``."""
    assert decode(encode(b"ab", sentinel=True)) == b"ab$"


def test_encode_prefix_maps_dollar() -> None:
    """Test that ``$`` in a prefix means the sentinel only when requested."""
    assert encode_prefix(b"a$", sentinel=True).tolist() == [98, SENTINEL_RANK]
    assert encode_prefix(b"a$", sentinel=False).tolist() == [98, 0x25]


def test_sort_keys_preserve_rank_order() -> None:
    """Test that key bytes compare like the ranks they encode."""
    low = sort_keys(np.array([1, 256], dtype=np.uint16))
    high = sort_keys(np.array([2, 0], dtype=np.uint16))
    assert low < high


def test_as_word() -> None:
    """Test bytes-like normalisation."""
    assert as_word(bytearray(b"ab")) == b"ab"
    with pytest.raises(TypeError):
        as_word("ab")  # type: ignore[arg-type]


def test_require_dollar_free() -> None:
    """Test rejection of the reserved byte."""
    assert require_dollar_free(b"abc") == b"abc"
    with pytest.raises(ReservedSymbolError, match="Provided value is not a valid"):
        require_dollar_free(b"a$")
