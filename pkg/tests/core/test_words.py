"""Tests for word predicates and elementary operations."""

import pytest

from bwtcat.core.words import (
    conj,
    is_lyndon,
    is_palindrome,
    is_primitive,
    lcp,
    least_rotation,
    primitive_root,
    reverse,
    truncate,
)
from bwtcat.errors import EditRangeError, EmptyWordError


@pytest.mark.parametrize("u,v,expected", [
    (b"abaab", b"abab", b"aba"),
    (b"abc", b"abc", b"abc"),
    (b"abc", b"ab", b"ab"),
    (b"", b"abc", b""),
    (b"b", b"a", b""),
])
def test_lcp(u: bytes, v: bytes, expected: bytes) -> None:
    """Test longest common prefixes."""
    assert lcp(u, v) == expected


def test_conj() -> None:
    """Test rotations by index."""
    assert conj(b"catastrophic", 3) == b"astrophiccat"
    assert conj(b"abc", 0) == b"abc"


@pytest.mark.parametrize("i", [-1, 3])
def test_conj_rejects_out_of_range(i: int) -> None:
    """Test that rotation indices must address a symbol."""
    with pytest.raises(EditRangeError):
        conj(b"abc", i)


def test_reverse_and_truncate() -> None:
    """Test reversal and removal of the last symbol."""
    assert reverse(b"abaab") == b"baaba"
    assert truncate(b"abaab") == b"abaa"
    assert truncate(b"a") == b""
    with pytest.raises(EmptyWordError):
        truncate(b"")


@pytest.mark.parametrize("word,expected", [
    (b"abaaba", True),
    (b"", True),
    (b"ab", False),
])
def test_is_palindrome(word: bytes, expected: bool) -> None:
    """Test palindrome detection."""
    assert is_palindrome(word) is expected


@pytest.mark.parametrize("word,primitive,root", [
    (b"abab", False, b"ab"),
    (b"aaa", False, b"a"),
    (b"aab", True, b"aab"),
    (b"abaab", True, b"abaab"),
    (b"a", True, b"a"),
])
def test_primitivity(word: bytes, primitive: bool, root: bytes) -> None:
    """Test primitivity and primitive roots."""
    assert is_primitive(word) is primitive
    assert primitive_root(word) == root


@pytest.mark.parametrize("word,expected", [
    (b"catastrophic", b"astrophiccat"),
    (b"baab", b"aabb"),
    (b"abab", b"abab"),
])
def test_least_rotation(word: bytes, expected: bytes) -> None:
    """Test lexicographically least rotations."""
    assert least_rotation(word) == expected


@pytest.mark.parametrize("word,expected", [
    (b"aabab", True),
    (b"ab", True),
    (b"a", True),
    (b"abab", False),
    (b"ba", False),
])
def test_is_lyndon(word: bytes, expected: bool) -> None:
    """Test Lyndon word detection."""
    assert is_lyndon(word) is expected
