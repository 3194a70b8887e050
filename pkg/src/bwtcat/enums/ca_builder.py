"""Conjugate array builder enumeration.

This module provides the enum selecting how rotations are sorted.
"""

from enum import Enum


class CABuilder(str, Enum):
    """Conjugate array construction strategies.

    Attributes:
        DOUBLING: Cyclic prefix doubling over numpy class arrays.
        NAIVE: Sort every rotation as a full string. Quadratic memory, used as the oracle.
    """

    DOUBLING = "doubling"
    NAIVE = "naive"
