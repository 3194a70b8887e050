"""Tests for the block word w_k."""

import pytest

from bwtcat.core.transform import r, r_dollar
from bwtcat.enums.wk_variant import WkVariant
from bwtcat.errors import ParameterError
from bwtcat.families.wk import (
    e_block,
    is_prefix_free,
    q_block,
    s_block,
    wk_blocks,
    wk_length,
    wk_prefixes,
    wk_variant_word,
    wk_word,
)


def test_blocks() -> None:
    """Test the three block shapes."""
    assert s_block(2) == b"abbaa"
    assert e_block(2) == b"abbab"
    assert e_block(4) == b"abbbbabaa"
    assert q_block(6) == b"abbbbbba"
    with pytest.raises(ParameterError):
        e_block(1)


def test_wk_blocks_are_sorted_and_prefix_free() -> None:
    """Test that the blocks of w_k appear in sorted order and form a prefix-free set."""
    for k in range(6, 51):
        blocks = wk_blocks(k)
        assert blocks == sorted(blocks)
        assert is_prefix_free(blocks)
        assert len(blocks) == 2 * (k - 2) + 1


@pytest.mark.parametrize("k", range(6, 201))
def test_wk_length(k: int) -> None:
    """Test |w_k| = (3k^2 + 7k - 18) / 2."""
    assert len(wk_word(k)) == wk_length(k) == (3 * k * k + 7 * k - 18) // 2


def test_w6() -> None:
    """Test length and run counts of w_6."""
    word = wk_word(6)
    assert len(word) == 66
    assert r(word) == 24
    assert r_dollar(word) == 32


@pytest.mark.parametrize("k", [0, 5])
def test_wk_bound(k: int) -> None:
    """Test that w_k needs k > 5."""
    with pytest.raises(ParameterError, match="k > 5"):
        wk_word(k)
    with pytest.raises(ParameterError):
        wk_length(k)


def test_is_prefix_free() -> None:
    """Test prefix-freeness on small collections."""
    assert is_prefix_free([b"ab", b"ba", b"aab"])
    assert not is_prefix_free([b"ab", b"abb"])
    assert is_prefix_free([])


def test_wk_prefixes() -> None:
    """Test the block prefixes of w_6 in rotation order."""
    assert wk_prefixes(6) == [
        b"$", b"a$", b"aa$",
        b"aaaab", b"aaab", b"aab", b"ab",
        b"b$", b"ba", b"bb$",
        b"bba", b"bbba", b"bbbba", b"bbbbba", b"bbbbbba", b"bbbbbbba",
    ]


@pytest.mark.parametrize("variant,suffix,length_change", [
    (WkVariant.PLAIN, b"", 0),
    (WkVariant.APPEND_A, b"a", 1),
    (WkVariant.TRUNCATED, b"", -1),
    (WkVariant.TRUNCATED_B, b"b", 0),
    (WkVariant.B_DOLLAR, b"b", 1),
    (WkVariant.BB_DOLLAR, b"bb", 2),
])
def test_wk_variant_word(variant: WkVariant, suffix: bytes, length_change: int) -> None:
    """Test the words behind the table rows."""
    word = wk_variant_word(6, variant)
    assert len(word) == 66 + length_change
    assert word.endswith(suffix)


def test_variant_dollar_flag() -> None:
    """Test which rows are end-marked."""
    assert [v.uses_dollar for v in WkVariant] == [False] * 4 + [True] * 4
