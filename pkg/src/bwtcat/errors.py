"""Exception types raised by bwtcat.

Every error derives from ``ValueError`` so callers validating input can keep catching
the builtin type.
"""


class BwtError(ValueError):
    """Base class for all bwtcat errors."""


class EmptyWordError(BwtError):
    """An operation that needs at least one symbol received the empty word."""

    def __init__(self, operation: str = "") -> None:
        suffix = f" ({operation})" if operation else ""
        super().__init__(f"empty word{suffix}")


class ReservedSymbolError(BwtError):
    """A word passed to the end-marker variant contains the byte used to print ``$``."""


class SentinelCountError(BwtError):
    """An end-marker transform does not contain exactly one ``$``."""


class NotABwtImageError(BwtError):
    """The given string is not the rotation BWT of any word."""

    def __init__(self, reason: str) -> None:
        super().__init__(f"not a BWT image: {reason}")


class EditRangeError(BwtError):
    """An edit position or symbol is not valid for the word it is applied to."""


class ParameterError(BwtError):
    """A family or check parameter is outside its supported range."""
