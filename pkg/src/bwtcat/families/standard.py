"""Standard, Fibonacci and central words.

Standard words follow ``s_0 = b``, ``s_1 = a`` and ``s_{i+1} = s_i^{d_{i-1}} s_{i-1}``;
note the offset: ``d[0]`` builds ``s_2``. Fibonacci words use ``d = (1, 1, ...)``.
Every generator is iterative.
"""

from typing import List, Union

from bwtcat.core.words import is_primitive, least_rotation
from bwtcat.errors import ParameterError
from bwtcat.families.directive import DirectiveSequence

A = b"a"
B = b"b"


def _directive(d: Union[DirectiveSequence, tuple, list, str]) -> DirectiveSequence:
    if isinstance(d, DirectiveSequence):
        return d
    return DirectiveSequence(d=d)


def standard_word(d: Union[DirectiveSequence, tuple, list, str], order: int) -> bytes:
    """Standard word of the given order.

    Args:
        d: Directive sequence
        order: Index of the word, ``0 <= order <= len(d) + 1``

    Returns:
        ``s_order``

    Raises:
        ParameterError: If ``order`` is negative or ``d`` is too short to reach it.
    """
    directive = _directive(d).d
    if order < 0:
        raise ParameterError(f"order must be non-negative, got {order}")
    if order > len(directive) + 1:
        raise ParameterError(
            f"order {order} needs {order - 1} directive entries, got {len(directive)}"
        )
    prev, cur = B, A
    if order == 0:
        return prev
    for step in range(1, order):
        prev, cur = cur, cur * directive[step - 1] + prev
    return cur


def fibonacci(order: int) -> bytes:
    """Fibonacci word of the given order, of length ``fibonacci_number(order)``."""
    if order < 0:
        raise ParameterError(f"order must be non-negative, got {order}")
    prev, cur = B, A
    if order == 0:
        return prev
    for _ in range(1, order):
        prev, cur = cur, cur + prev
    return cur


def fibonacci_number(i: int) -> int:
    """``F_i`` with ``F_0 = F_1 = 1``."""
    if i < 0:
        raise ParameterError(f"index must be non-negative, got {i}")
    prev, cur = 1, 1
    for _ in range(1, i):
        prev, cur = cur, cur + prev
    return cur


def central_word(order: int) -> bytes:
    """Fibonacci word of the given order without its last two symbols; a palindrome."""
    if order < 2:
        raise ParameterError(f"central words start at order 2, got {order}")
    return fibonacci(order)[:-2]


def standard_central_word(d: Union[DirectiveSequence, tuple, list, str], order: int) -> bytes:
    """Central factor of an arbitrary standard word."""
    if order < 2:
        raise ParameterError(f"central words start at order 2, got {order}")
    return standard_word(d, order)[:-2]


def reverse_fibonacci(order: int) -> bytes:
    """Fibonacci word of the given order read right to left."""
    return fibonacci(order)[::-1]


def lyndon_rotation(w: bytes) -> bytes:
    """The Lyndon conjugate of a primitive word.

    Raises:
        ParameterError: If ``w`` is a proper power.
    """
    if not is_primitive(w):
        raise ParameterError(f"Lyndon rotation needs a primitive word: {w[:32]!r}")
    return least_rotation(w)


def fibonacci_factorization(k: int) -> List[bytes]:
    """Factors ``x_{2k-1}, ba, x_{2k-3}, ba, ..., x_5, ba, s_4`` of ``fibonacci(2k)``.

    Args:
        k: Half the order, at least 3

    Returns:
        The factors in order; they concatenate to ``fibonacci(2k)``.
    """
    if k < 3:
        raise ParameterError(f"factorization needs 2k > 4, got k={k}")
    factors: List[bytes] = []
    for odd in range(2 * k - 1, 4, -2):
        factors.extend((central_word(odd), B + A))
    factors.append(fibonacci(4))
    return factors
