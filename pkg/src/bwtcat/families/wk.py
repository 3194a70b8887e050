"""The block word w_k and its edited forms.

For ``k > 5``::

    w_k = s_2 e_2 s_3 e_3 ... s_{k-1} e_{k-1} q_k
    s_i = a b^i a a        e_i = a b^i a b a^(i-2)        q_k = a b^k a

The blocks form a prefix-free set sorted as s_2 < e_2 < s_3 < ... < e_{k-1} < q_k,
and ``len(w_k) == (3k^2 + 7k - 18) / 2``.
"""

from typing import Iterable, List

from bwtcat.enums.wk_variant import WkVariant
from bwtcat.errors import ParameterError

WK_MIN = 6


def _check_k(k: int) -> None:
    if k < WK_MIN:
        raise ParameterError(f"w_k defined only for k > 5, got {k}")


def s_block(i: int) -> bytes:
    return b"a" + b"b" * i + b"aa"


def e_block(i: int) -> bytes:
    if i < 2:
        raise ParameterError(f"e_i needs i >= 2, got {i}")
    return b"a" + b"b" * i + b"ab" + b"a" * (i - 2)


def q_block(k: int) -> bytes:
    return b"a" + b"b" * k + b"a"


def wk_blocks(k: int) -> List[bytes]:
    """Blocks of w_k in concatenation order, which is also their sorted order."""
    _check_k(k)
    blocks: List[bytes] = []
    for i in range(2, k):
        blocks.extend((s_block(i), e_block(i)))
    blocks.append(q_block(k))
    return blocks


def wk_word(k: int) -> bytes:
    """The word w_k.

    Raises:
        ParameterError: If ``k <= 5``.
    """
    return b"".join(wk_blocks(k))


def wk_length(k: int) -> int:
    """Closed-form length of w_k."""
    _check_k(k)
    return (3 * k * k + 7 * k - 18) // 2


def wk_prefixes(k: int) -> List[bytes]:
    """Block prefixes of the w_k tables in rotation order; ``$`` is the end-marker.

    ``$ < a$ < aa$ < a^(k-2)b < ... < ab < b$ < ba < bb$ < b^2 a < ... < b^(k+1) a``
    """
    _check_k(k)
    prefixes = [b"$", b"a$", b"aa$"]
    prefixes += [b"a" * i + b"b" for i in range(k - 2, 0, -1)]
    prefixes += [b"b$", b"ba", b"bb$"]
    prefixes += [b"b" * j + b"a" for j in range(2, k + 2)]
    return prefixes


def is_prefix_free(words: Iterable[bytes]) -> bool:
    """Whether no word of the collection is a prefix of another one."""
    ordered = sorted(words)
    return all(not b.startswith(a) for a, b in zip(ordered, ordered[1:]))


def wk_variant_word(k: int, variant: WkVariant) -> bytes:
    """The word behind a table row; end-marked rows omit the ``$`` itself."""
    word = wk_word(k)
    match variant:
        case WkVariant.PLAIN | WkVariant.DOLLAR:
            return word
        case WkVariant.APPEND_A | WkVariant.A_DOLLAR:
            return word + b"a"
        case WkVariant.TRUNCATED:
            return word[:-1]
        case WkVariant.TRUNCATED_B:
            return word[:-1] + b"b"
        case WkVariant.B_DOLLAR:
            return word + b"b"
        case WkVariant.BB_DOLLAR:
            return word + b"bb"
    raise ValueError(f"No implementation for variant: {variant}")
