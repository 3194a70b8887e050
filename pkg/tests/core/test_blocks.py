"""Tests for BWT blocks."""

import pytest
from pydantic import ValidationError

from bwtcat.core.blocks import BlockIndex, BlockQuery, bwt_block, bwt_block_dollar
from bwtcat.core.transform import bwt
from bwtcat.enums.ca_builder import CABuilder
from bwtcat.errors import ReservedSymbolError
from bwtcat.families.wk import wk_word


@pytest.fixture
def catastrophic_index() -> BlockIndex:
    """Block index over the rotations of ``catastrophic``."""
    return BlockIndex(b"catastrophic")


@pytest.mark.parametrize("prefix,block", [
    (b"a", b"tc"),
    (b"c", b"ci"),
    (b"t", b"as"),
    (b"ta", b"a"),
    (b"ccat", b"i"),
    (b"z", b""),
    (b"catastrophicca", b"c"),
])
def test_block(catastrophic_index: BlockIndex, prefix: bytes, block: bytes) -> None:
    """Test blocks of single and multi-symbol prefixes, including prefixes longer than the word."""
    assert catastrophic_index.block(prefix) == block


def test_block_accepts_query_model(catastrophic_index: BlockIndex) -> None:
    """Test that a BlockQuery and its raw prefix give the same block."""
    assert catastrophic_index.block(BlockQuery(prefix=b"a")) == catastrophic_index.block(b"a")


def test_blocks_tile_the_transform(catastrophic_index: BlockIndex) -> None:
    """Test that the blocks of every distinct first symbol concatenate to the BWT."""
    firsts = sorted(set(b"catastrophic"))
    assert b"".join(catastrophic_index.block(bytes([c])) for c in firsts) == b"tcciphrotaas"
    assert catastrophic_index.bwt == b"tcciphrotaas"


def test_block_query_rejects_empty_prefix() -> None:
    """Test that the empty prefix is not a query."""
    with pytest.raises(ValidationError):
        BlockQuery(prefix=b"")


@pytest.mark.parametrize("prefix,block", [
    (b"$", b"c"),
    (b"c$", b"i"),
    (b"c", b"i$"),
    (b"a", b"tc"),
])
def test_block_dollar(prefix: bytes, block: bytes) -> None:
    """Test end-marker blocks where ``$`` in the prefix is the sentinel."""
    assert bwt_block_dollar(b"catastrophic", prefix) == block


def test_block_dollar_rejects_reserved_byte() -> None:
    """Test that the end-marker variant needs a word without ``$``."""
    with pytest.raises(ReservedSymbolError):
        bwt_block_dollar(b"a$", b"a")


def test_block_on_periodic_word(builder: CABuilder) -> None:
    """Test blocks of a proper power."""
    assert bwt_block(b"abab", b"ab", builder) == b"bb"
    assert bwt_block(b"abab", b"ba", builder) == b"aa"


def test_wk_last_block() -> None:
    """Test that the block of b^k a in w_k is a single a."""
    assert bwt_block(wk_word(6), b"b" * 6 + b"a") == b"a"


def test_wk_blocks_concatenate(builder: CABuilder) -> None:
    """Test that w_6 blocks by first two symbols concatenate to its BWT."""
    word = wk_word(6)
    index = BlockIndex(word, builder=builder)
    prefixes = [b"aa", b"ab", b"ba", b"bb"]
    assert b"".join(index.block(p) for p in prefixes) == bwt(word, builder).bwt
