"""Verification check identifiers.

These identifiers are stable: they appear in serialized reports and on the command line.
"""

from enum import Enum


class CheckId(str, Enum):
    """Identifiers of the registered closed-form checks."""

    # Fibonacci words
    FIB_APPEND = "fib.append"
    FIB_NEWSYM = "fib.newsym"
    FIB_INSERT = "fib.insert"
    FIB_DELETE = "fib.delete"
    FIB_SUBST = "fib.subst"
    # Polynomial run family
    TFAM = "tfam"
    # Block word w_k
    WK_BWT = "wk.bwt"
    WK_INS = "wk.ins"
    WK_DEL = "wk.del"
    WK_SUB = "wk.sub"
    # End-marker variant
    DOLLAR_PREPEND = "dollar.prepend"
    DOLLAR_APPEND_MIN = "dollar.append_min"
    DOLLAR_LYNDON_B = "dollar.lyndon_b"
    DOLLAR_WK = "dollar.wk"
    DOLLAR_WK_B = "dollar.wk_b"
    DOLLAR_WK_BB = "dollar.wk_bb"
    DOLLAR_WK_A = "dollar.wk_a"
    DOLLAR_RATIO = "dollar.ratio"
    DOLLAR_DIFF = "dollar.diff"
