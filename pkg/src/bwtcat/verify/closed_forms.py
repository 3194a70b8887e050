"""Closed-form BWTs and run counts.

Every function evaluates a known formula in exact integer arithmetic and returns the
expected string or count; nothing here sorts rotations.
"""

from typing import Dict, List, Tuple

from bwtcat.enums.wk_variant import WkVariant
from bwtcat.errors import ParameterError
from bwtcat.families.standard import fibonacci_number as F
from bwtcat.families.wk import wk_prefixes


def a(n: int) -> bytes:
    return b"a" * n


def b(n: int) -> bytes:
    return b"b" * n


def truncated_fibonacci_bwt(k: int) -> bytes:
    """BWT of the even-order Fibonacci word ``fibonacci(2k)`` without its last symbol."""
    if k < 3:
        raise ParameterError(f"closed form needs k >= 3, got {k}")
    middle = b"".join(b"a" + b(F(2 * j - 1)) for j in range(k - 2, 0, -1))
    return (
        b(k - 1) + b"a" + b(F(2 * k - 3) - k + 1) + middle + a(F(2 * k - 1) - k + 1)
    )


def prepend_a_odd_fibonacci_bwt(k: int) -> bytes:
    """BWT of ``a`` followed by the reversed odd-order word ``fibonacci(2k+1)``."""
    if k < 2:
        raise ParameterError(f"closed form needs k > 1, got {k}")
    middle = b"".join(b"a" + b(F(2 * j)) for j in range(k - 3, -1, -1))
    return b(F(2 * k - 2)) + b"aa" + b(F(2 * k - 4)) + middle + a(F(2 * k) - k + 1)


def t_family_linear_bwt(i: int) -> bytes:
    """BWT of ``t_family_word(i, 1)``."""
    if i < 3:
        raise ParameterError(f"closed form needs i >= 3, got {i}")
    middle = b"".join(b"a" + b(j) for j in range(i - 1, 1, -1))
    return b(i + 1) + middle + b"aa"


def t_family_runs(i: int, k: int) -> int:
    return 2 * i - 2 if k == 1 else 2 * i


WK_RUNS = {
    WkVariant.PLAIN: (6, -12),
    WkVariant.APPEND_A: (8, -20),
    WkVariant.TRUNCATED: (8, -20),
    WkVariant.TRUNCATED_B: (8, -20),
    WkVariant.DOLLAR: (8, -16),
    WkVariant.B_DOLLAR: (6, -13),
    WkVariant.BB_DOLLAR: (8, -17),
    WkVariant.A_DOLLAR: (8, -16),
}


def wk_runs(k: int, variant: WkVariant) -> int:
    """Run count of a w_k row, ``slope * k + offset``."""
    slope, offset = WK_RUNS[variant]
    return slope * k + offset


def _ab_block(k: int, variant: WkVariant) -> bytes:
    tail = b"ab" + a(2 * k - 6)
    match variant:
        case WkVariant.PLAIN | WkVariant.APPEND_A:
            return b(k - 2) + b"a" + tail
        case WkVariant.TRUNCATED | WkVariant.TRUNCATED_B:
            return b(k - 2) + b"b" + tail
        case WkVariant.DOLLAR | WkVariant.A_DOLLAR:
            return b(k - 2) + b"$" + tail
    return b(k - 1) + b"$" + tail


def _ba_block(k: int, variant: WkVariant) -> bytes:
    match variant:
        case WkVariant.PLAIN:
            return a(k - 5) + b"bbba" + b(k - 4) + b"a" + b(k - 2) + b"a"
        case WkVariant.APPEND_A:
            return a(k - 5) + b"bbbba" + b(k - 5) + b"a" + b(k - 2) + b"a"
        case WkVariant.TRUNCATED | WkVariant.TRUNCATED_B:
            return a(k - 5) + b"bbba" + b(k - 5) + b"a" + b(k - 2) + b"ba"
        case WkVariant.DOLLAR | WkVariant.A_DOLLAR:
            return b"b" + a(k - 5) + b"bbba" + b(k - 5) + b"a" + b(k - 2) + b"a"
    return a(k - 5) + b"bbba" + b(k - 5) + b"a" + b(k - 1) + b"a"


def _b_j_a_block(k: int, j: int, variant: WkVariant) -> bytes:
    match variant:
        case WkVariant.PLAIN | WkVariant.B_DOLLAR:
            return b"a" + b(2 * k - 2 * j - 1) + b"a"
        case WkVariant.APPEND_A | WkVariant.DOLLAR | WkVariant.A_DOLLAR:
            return b"ba" + b(2 * k - 2 * j - 2) + b"a"
    return b"a" + b(2 * k - 2 * j - 2) + b"ab"


_SENTINEL_BLOCKS: Dict[WkVariant, Dict[bytes, bytes]] = {
    WkVariant.DOLLAR: {b"$": b"a", b"a$": b"b"},
    WkVariant.B_DOLLAR: {b"$": b"b", b"b$": b"a"},
    WkVariant.BB_DOLLAR: {b"$": b"b", b"b$": b"b", b"bb$": b"a"},
    WkVariant.A_DOLLAR: {b"$": b"a", b"a$": b"a", b"aa$": b"b"},
}


def wk_block_table(k: int, variant: WkVariant) -> List[Tuple[bytes, bytes]]:
    """Expected block of every prefix of :func:`wk_prefixes` for one w_k row.

    Prefixes absent from the word map to the empty block, so the blocks concatenate
    to the full BWT.
    """
    blocks: Dict[bytes, bytes] = dict(_SENTINEL_BLOCKS.get(variant, {}))
    for i in range(4, k - 1):
        blocks[a(i) + b"b"] = b"b" + a(k - i - 2)
    extra_b = b"b" if variant is WkVariant.APPEND_A else b""
    blocks[b"aaab"] = extra_b + b(5) + b"ab" * (k - 6) + b"a"
    if variant is WkVariant.PLAIN:
        blocks[b"aab"] = b"baab" + a(2 * k - 8)
    elif variant is WkVariant.APPEND_A:
        blocks[b"aab"] = b"aaab" + a(2 * k - 8)
    else:
        blocks[b"aab"] = b"aab" + a(2 * k - 8)
    blocks[b"ab"] = _ab_block(k, variant)
    blocks[b"ba"] = _ba_block(k, variant)
    for j in range(2, k):
        blocks[b(j) + b"a"] = _b_j_a_block(k, j, variant)
    if variant is WkVariant.TRUNCATED_B:
        blocks[b(k) + b"a"] = b"b"
        blocks[b(k + 1) + b"a"] = b"a"
    else:
        blocks[b(k) + b"a"] = b"a"
    return [(prefix, blocks.get(prefix, b"")) for prefix in wk_prefixes(k)]


def wk_bwt(k: int, variant: WkVariant) -> bytes:
    """Full BWT of a w_k row as the concatenation of its blocks."""
    return b"".join(block for _, block in wk_block_table(k, variant))
