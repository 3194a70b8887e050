"""Validation utilities package."""

from .directive_validator import DirectiveValidator
from .edit_validator import EditOpValidator
from .word_validator import WordValidator

__all__ = ["DirectiveValidator", "EditOpValidator", "WordValidator"]
