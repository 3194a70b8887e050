"""Alphabet policy enumeration for sensitivity scans."""

from enum import Enum


class AlphabetPolicy(str, Enum):
    """Symbols an exhaustive edit scan may insert or substitute."""

    WORD_ALPHABET = "word-alphabet"                        # symbols already in the word
    WORD_ALPHABET_PLUS_FRESH = "word-alphabet-plus-fresh"  # plus one below and one above
