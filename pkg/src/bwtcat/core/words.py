"""Predicates and elementary operations on words."""

from typing import Optional

from bwtcat.core.conjugate_array import conjugate_array
from bwtcat.core.symbols import WordLike, as_word, require_word
from bwtcat.enums.ca_builder import CABuilder
from bwtcat.errors import EditRangeError


def lcp(u: WordLike, v: WordLike) -> bytes:
    """Longest common prefix of two words."""
    a, b = as_word(u), as_word(v)
    size = min(len(a), len(b))
    for i in range(size):
        if a[i] != b[i]:
            return a[:i]
    return a[:size]


def conj(w: WordLike, i: int) -> bytes:
    """The rotation of ``w`` starting at index ``i``.

    Raises:
        EditRangeError: If ``i`` is not in ``0..len(w)-1``.
    """
    word = as_word(w)
    if not 0 <= i < len(word):
        raise EditRangeError(f"rotation index {i} out of range for length {len(word)}")
    return word[i:] + word[:i]


def reverse(w: WordLike) -> bytes:
    """``w`` read right to left."""
    return as_word(w)[::-1]


def truncate(w: WordLike) -> bytes:
    """``w`` without its last symbol."""
    return require_word(w, "truncate")[:-1]


def is_palindrome(w: WordLike) -> bool:
    """Whether ``w`` equals its reverse."""
    word = as_word(w)
    return word == word[::-1]


def is_primitive(w: WordLike) -> bool:
    """Whether ``w`` is not a proper power of a shorter word."""
    word = require_word(w, "is_primitive")
    return (word + word).find(word, 1) == len(word)


def primitive_root(w: WordLike) -> bytes:
    """Shortest ``u`` with ``w == u * e`` for some ``e``."""
    word = require_word(w, "primitive_root")
    return word[: (word + word).find(word, 1)]


def least_rotation(w: WordLike, builder: Optional[CABuilder] = None) -> bytes:
    """Lexicographically least rotation of a non-empty word."""
    word = require_word(w, "least_rotation")
    return conj(word, int(conjugate_array(word, builder).order[0]))


def is_lyndon(w: WordLike) -> bool:
    """Whether ``w`` is strictly smaller than each of its proper rotations."""
    word = require_word(w, "is_lyndon")
    return is_primitive(word) and least_rotation(word) == word
