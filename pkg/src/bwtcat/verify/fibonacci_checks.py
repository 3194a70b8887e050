"""Single-edit catastrophes on Fibonacci words.

For the even-order word s = fibonacci(2k) the rotation BWT has two runs, yet one
appended, inserted, deleted or substituted symbol produces Θ(log n) runs. Every check
below compares the exact value at a concrete k.
"""

import logging
from typing import List, Optional

from bwtcat.config import RuntimeConfig
from bwtcat.core.transform import r
from bwtcat.enums.check_id import CheckId
from bwtcat.errors import ParameterError
from bwtcat.families.standard import fibonacci, fibonacci_number, reverse_fibonacci
from bwtcat.sensitivity.edit_op import EditOp
from bwtcat.sensitivity.effects import apply_edit
from bwtcat.verify import closed_forms
from bwtcat.verify.harness import count_report, interval_report, word_report
from bwtcat.verify.registry import CheckParams, CheckRegistry
from bwtcat.verify.report import VerifyReport

FIB_K_MIN = 3

# symbols above and below the binary alphabet
ABOVE = b"c"
BELOW = b"A"


def _k(params: CheckParams) -> int:
    if params.k < FIB_K_MIN:
        raise ParameterError(f"Fibonacci checks need k >= {FIB_K_MIN}, got {params.k}")
    return params.k


@CheckRegistry.register(CheckId.FIB_APPEND, k_min=FIB_K_MIN, fibonacci_sized=True)
def check_append(params: CheckParams, config: RuntimeConfig) -> List[VerifyReport]:
    """Appending to the reversed word: ``b`` at even order, ``a`` at odd order."""
    k = _k(params)
    even = reverse_fibonacci(2 * k) + b"b"
    odd = reverse_fibonacci(2 * k + 1) + b"a"
    return [
        count_report(CheckId.FIB_APPEND, {"k": k, "order": 2 * k, "append": "b"},
                     2 * k, r(even, config.builder)),
        count_report(CheckId.FIB_APPEND, {"k": k, "order": 2 * k + 1, "append": "a"},
                     2 * k, r(odd, config.builder)),
    ]


@CheckRegistry.register(CheckId.FIB_NEWSYM, k_min=FIB_K_MIN, fibonacci_sized=True)
def check_new_symbol(params: CheckParams, config: RuntimeConfig) -> List[VerifyReport]:
    """Appending a symbol outside the alphabet, plus the BWT of ``a`` prepended."""
    k = _k(params)
    even = reverse_fibonacci(2 * k)
    odd = reverse_fibonacci(2 * k + 1)
    observed_odd = r(odd + BELOW, config.builder)
    return [
        count_report(CheckId.FIB_NEWSYM, {"k": k, "order": 2 * k, "append": "c"},
                     2 * k + 1, r(even + ABOVE, config.builder)),
        interval_report(CheckId.FIB_NEWSYM, {"k": k, "order": 2 * k + 1, "append": "A"},
                        2 * k + 2, 2 * k + 3, observed_odd,
                        detail=f"observed {observed_odd}, interval endpoint not predicted"),
        word_report(CheckId.FIB_NEWSYM, {"k": k, "order": 2 * k + 1, "prepend": "a"},
                    b"a" + odd, closed_forms.prepend_a_odd_fibonacci_bwt(k), config),
    ]


@CheckRegistry.register(CheckId.FIB_INSERT, k_min=FIB_K_MIN, fibonacci_sized=True)
def check_insert(params: CheckParams, config: RuntimeConfig) -> List[VerifyReport]:
    """Insertion of ``b`` at F_{2k-1}-2 and of ``a`` at F_{2k}-2."""
    k = _k(params)
    s = fibonacci(2 * k)
    reports = []
    for sym, pos, expected in (
        (b"b", fibonacci_number(2 * k - 1) - 2, 2 * k),
        (b"a", fibonacci_number(2 * k) - 2, 2 * k - 2),
    ):
        edited = apply_edit(s, EditOp.insert(pos, sym))
        reports.append(count_report(
            CheckId.FIB_INSERT,
            {"k": k, "order": 2 * k, "insert": sym.decode(), "pos": pos},
            expected,
            r(edited, config.builder),
        ))
    return reports


@CheckRegistry.register(CheckId.FIB_DELETE, k_min=FIB_K_MIN, fibonacci_sized=True)
def check_delete(params: CheckParams, config: RuntimeConfig) -> List[VerifyReport]:
    """Deleting the last symbol: exact BWT and 2k runs."""
    k = _k(params)
    truncated = fibonacci(2 * k)[:-1]
    params_map = {"k": k, "order": 2 * k, "delete": "last"}
    return [
        word_report(CheckId.FIB_DELETE, params_map, truncated,
                    closed_forms.truncated_fibonacci_bwt(k), config),
        count_report(CheckId.FIB_DELETE, params_map, 2 * k, r(truncated, config.builder)),
    ]


@CheckRegistry.register(CheckId.FIB_SUBST, k_min=FIB_K_MIN, fibonacci_sized=True)
def check_substitute(params: CheckParams, config: RuntimeConfig) -> List[VerifyReport]:
    """Substituting the last ``b`` by ``a`` gives 2k+2 runs."""
    k = _k(params)
    substituted = fibonacci(2 * k)[:-1] + b"a"
    return [
        count_report(CheckId.FIB_SUBST, {"k": k, "order": 2 * k, "substitute": "a"},
                     2 * k + 2, r(substituted, config.builder)),
    ]


FIBONACCI_CHECKS = (
    CheckId.FIB_APPEND,
    CheckId.FIB_NEWSYM,
    CheckId.FIB_INSERT,
    CheckId.FIB_DELETE,
    CheckId.FIB_SUBST,
)


def verify_fibonacci_catastrophes(
    k: int, config: Optional[RuntimeConfig] = None
) -> List[VerifyReport]:
    """Run every Fibonacci check at ``k``.

    Raises:
        ParameterError: If ``k < 3``.
    """
    config = config or RuntimeConfig.from_env()
    params = CheckParams(k=k)
    _k(params)
    logging.debug(f"Fibonacci checks at k={k}, word length {fibonacci_number(2 * k + 1)}")
    reports: List[VerifyReport] = []
    for check_id in FIBONACCI_CHECKS:
        reports.extend(CheckRegistry.get(check_id).run(params, config))
    return reports
