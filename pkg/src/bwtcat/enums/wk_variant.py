"""Variants of the block word w_k whose BWTs are known block by block."""

from enum import Enum


class WkVariant(str, Enum):
    """Edited and end-marked forms of w_k, in table row order."""

    PLAIN = "w_k"
    APPEND_A = "w_k a"
    TRUNCATED = "w_k^"
    TRUNCATED_B = "w_k^ b"
    DOLLAR = "w_k $"
    B_DOLLAR = "w_k b$"
    BB_DOLLAR = "w_k bb$"
    A_DOLLAR = "w_k a$"

    @property
    def uses_dollar(self) -> bool:
        """Whether the word is terminated by the end-marker."""
        return self.value.endswith("$")
