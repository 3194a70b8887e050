"""Directive sequence validation."""

from typing import Sequence


class DirectiveValidator:
    """Validates directive sequences of standard words."""

    def validate(self, d: Sequence[int]) -> bool:
        """Validates that every directive entry is positive.

        Args:
            d: The directive entries to validate.

        Returns:
            bool: True if all entries are at least 1, False otherwise.
        """
        return all(entry >= 1 for entry in d)
