"""Words with a polynomial number of BWT runs.

``t_family_word(i, k)`` is the product over ``j = 1..i`` of ``a b^(j^k)``.
"""

from bwtcat.errors import ParameterError


def t_family_word(i: int, k: int) -> bytes:
    """Product of ``a b^(j**k)`` for ``j`` from 1 to ``i``."""
    if i < 1 or k < 1:
        raise ParameterError(f"t-family needs i >= 1 and k >= 1, got i={i}, k={k}")
    return b"".join(b"a" + b"b" * (j**k) for j in range(1, i + 1))


def t_family_length(i: int, k: int) -> int:
    return i + sum(j**k for j in range(1, i + 1))
