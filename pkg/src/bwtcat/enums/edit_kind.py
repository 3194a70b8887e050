"""Edit kind enumeration.

This module provides the enum for the three single-character edit operations.
"""

from enum import Enum


class EditKind(str, Enum):
    """Single-character edit operations.

    Declaration order is the ordering used when sorting edit records.
    """

    INSERT = "insert"           # one symbol added, length n+1
    DELETE = "delete"           # one symbol removed, length n-1
    SUBSTITUTE = "substitute"   # one symbol replaced, length n

    @property
    def ordinal(self) -> int:
        """Position of this kind in declaration order."""
        return list(EditKind).index(self)
