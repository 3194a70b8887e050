"""Tests for the word validator module."""

from typing import TYPE_CHECKING
import pytest

from bwtcat.validators.word_validator import SENTINEL_BYTE, WordValidator

if TYPE_CHECKING:
    from _pytest.fixtures import FixtureRequest

@pytest.fixture
def validator() -> WordValidator:
    """Create a WordValidator instance for testing.

    Returns:
        WordValidator: A new instance of WordValidator.
    """
    return WordValidator()

@pytest.mark.parametrize("word", [b"a", b"catastrophic", b"\x00", b"$"])
def test_validate_nonempty_word(validator: WordValidator, word: bytes) -> None:
    """Test validation of non-empty words.

    Args:
        validator: The WordValidator instance to test.
        word: The word to validate.
    """
    assert validator.validate(word) is True

def test_validate_empty_word(validator: WordValidator) -> None:
    """Test that the empty word is rejected."""
    assert validator.validate(b"") is False

@pytest.mark.parametrize("word,valid", [
    (b"", True),
    (b"abab", True),
    (b"#%", True),
    (b"a$b", False),
    (bytes([SENTINEL_BYTE]), False),
])
def test_validate_dollar_free(validator: WordValidator, word: bytes, valid: bool) -> None:
    """Test detection of the reserved end-marker byte.

    Args:
        validator: The WordValidator instance to test.
        word: The word to validate.
        valid: Expected result.
    """
    assert validator.validate_dollar_free(word) is valid
