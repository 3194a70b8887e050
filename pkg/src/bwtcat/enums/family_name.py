"""Word family enumeration.

This module provides the identifiers under which word generators are registered.
"""

from enum import Enum


class FamilyName(str, Enum):
    """Registered word families.

    The string values are the names accepted by ``bwtcat generate``.
    """

    FIBONACCI = "fibonacci"   # s_{i+1} = s_i s_{i-1}
    STANDARD = "standard"     # standard word from a directive sequence
    CENTRAL = "central"       # Fibonacci word without its last two symbols
    WK = "wk"                 # block word w_k, k > 5
    TFAM = "tfam"             # product of a b^{j^k}
    REVFIB = "revfib"         # reversed Fibonacci word
    LYNDONROT = "lyndonrot"   # least rotation of a Fibonacci word
