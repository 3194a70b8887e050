"""Checks on r_$, the run count of the BWT of w$.

Prepending a symbol changes r_$ by at most -1..+2, appending the least symbol by 0..+1.
The block words w_k end-marked directly or after appending b, bb or a have known BWTs,
and r and r_$ drift apart on both w_k and the reversed odd-order Fibonacci words.
"""

from typing import List, Optional, Tuple

from bwtcat.config import RuntimeConfig
from bwtcat.core.transform import r, r_dollar
from bwtcat.enums.check_id import CheckId
from bwtcat.enums.wk_variant import WkVariant
from bwtcat.errors import ParameterError
from bwtcat.families.standard import fibonacci, lyndon_rotation, reverse_fibonacci
from bwtcat.families.wk import WK_MIN, wk_word, wk_variant_word
from bwtcat.sensitivity.edit_op import Ratio
from bwtcat.verify import closed_forms
from bwtcat.verify.harness import block_report, count_report, interval_report
from bwtcat.verify.registry import CheckParams, CheckRegistry
from bwtcat.verify.report import VerifyReport

DOLLAR_K_MIN = 2
LYNDON_GROWTH_K_MIN = 4

VARIANT_CHECKS = {
    CheckId.DOLLAR_WK: WkVariant.DOLLAR,
    CheckId.DOLLAR_WK_B: WkVariant.B_DOLLAR,
    CheckId.DOLLAR_WK_BB: WkVariant.BB_DOLLAR,
    CheckId.DOLLAR_WK_A: WkVariant.A_DOLLAR,
}

BB_LABEL_NOTE = "8k-17 is the count of w_k bb$, sometimes labelled r_$(w_k b)"


def _k(params: CheckParams, minimum: int) -> int:
    if params.k < minimum:
        raise ParameterError(f"check needs k >= {minimum}, got {params.k}")
    return params.k


def _sample_words(k: int) -> List[Tuple[str, bytes]]:
    words = [(f"fibonacci({2 * k})", fibonacci(2 * k))]
    if k >= WK_MIN:
        words.append((f"w_{k}", wk_word(k)))
    return words


@CheckRegistry.register(CheckId.DOLLAR_PREPEND, k_min=DOLLAR_K_MIN, fibonacci_sized=True)
def check_prepend(params: CheckParams, config: RuntimeConfig) -> List[VerifyReport]:
    """r_$(v) - 1 <= r_$(xv) <= r_$(v) + 2."""
    k = _k(params, DOLLAR_K_MIN)
    reports = []
    for name, word in _sample_words(k):
        base = r_dollar(word, config.builder)
        for x in (b"a", b"b"):
            reports.append(interval_report(
                CheckId.DOLLAR_PREPEND,
                {"k": k, "word": name, "prepend": x.decode()},
                base - 1,
                base + 2,
                r_dollar(x + word, config.builder),
                detail=f"r_$(v)={base}",
            ))
    return reports


@CheckRegistry.register(CheckId.DOLLAR_APPEND_MIN, k_min=DOLLAR_K_MIN, fibonacci_sized=True)
def check_append_min(params: CheckParams, config: RuntimeConfig) -> List[VerifyReport]:
    """r_$(v) <= r_$(va) <= r_$(v) + 1 for ``a`` not above any symbol of v."""
    k = _k(params, DOLLAR_K_MIN)
    reports = []
    for name, word in _sample_words(k):
        base = r_dollar(word, config.builder)
        reports.append(interval_report(
            CheckId.DOLLAR_APPEND_MIN,
            {"k": k, "word": name, "append": "a"},
            base,
            base + 1,
            r_dollar(word + b"a", config.builder),
            detail=f"r_$(v)={base}",
        ))
    return reports


def _lyndon_b(k: int, config: RuntimeConfig) -> int:
    return r_dollar(lyndon_rotation(fibonacci(2 * k)) + b"b", config.builder)


@CheckRegistry.register(CheckId.DOLLAR_LYNDON_B, k_min=DOLLAR_K_MIN, fibonacci_sized=True)
def check_lyndon_b(params: CheckParams, config: RuntimeConfig) -> List[VerifyReport]:
    """Lyndon rotation v of fibonacci(2k): r_$(v) stays small while r_$(vb) grows."""
    k = _k(params, DOLLAR_K_MIN)
    v = lyndon_rotation(fibonacci(2 * k))
    grown = _lyndon_b(k, config)
    name = f"lyndon(fibonacci({2 * k}))"
    reports = [
        interval_report(CheckId.DOLLAR_LYNDON_B, {"k": k, "word": name},
                        1, 4, r_dollar(v, config.builder)),
        interval_report(CheckId.DOLLAR_LYNDON_B, {"k": k, "word": name, "append": "b"},
                        2 * k - 2, None, grown, detail=f"r_$(vb)={grown}"),
    ]
    if k >= LYNDON_GROWTH_K_MIN:
        previous = _lyndon_b(k - 1, config)
        reports.append(interval_report(
            CheckId.DOLLAR_LYNDON_B,
            {"k": k, "word": name, "append": "b", "compare": "k-1"},
            previous + 1,
            None,
            grown,
            detail=f"r_$(vb) at k-1 is {previous}",
        ))
    return reports


def _variant_reports(check_id: CheckId, k: int, config: RuntimeConfig) -> List[VerifyReport]:
    variant = VARIANT_CHECKS[check_id]
    word = wk_variant_word(k, variant)
    params = {"k": k, "word": variant.value}
    note = BB_LABEL_NOTE if variant is WkVariant.BB_DOLLAR else ""
    return [
        count_report(check_id, params, closed_forms.wk_runs(k, variant),
                     r_dollar(word, config.builder), detail=note),
        block_report(check_id, params, word, closed_forms.wk_block_table(k, variant),
                     config, dollar=True, detail=note),
    ]


@CheckRegistry.register(CheckId.DOLLAR_WK, k_min=WK_MIN)
def check_wk_dollar(params: CheckParams, config: RuntimeConfig) -> List[VerifyReport]:
    return _variant_reports(CheckId.DOLLAR_WK, _k(params, WK_MIN), config)


@CheckRegistry.register(CheckId.DOLLAR_WK_B, k_min=WK_MIN)
def check_wk_b_dollar(params: CheckParams, config: RuntimeConfig) -> List[VerifyReport]:
    return _variant_reports(CheckId.DOLLAR_WK_B, _k(params, WK_MIN), config)


@CheckRegistry.register(CheckId.DOLLAR_WK_BB, k_min=WK_MIN)
def check_wk_bb_dollar(params: CheckParams, config: RuntimeConfig) -> List[VerifyReport]:
    return _variant_reports(CheckId.DOLLAR_WK_BB, _k(params, WK_MIN), config)


@CheckRegistry.register(CheckId.DOLLAR_WK_A, k_min=WK_MIN)
def check_wk_a_dollar(params: CheckParams, config: RuntimeConfig) -> List[VerifyReport]:
    return _variant_reports(CheckId.DOLLAR_WK_A, _k(params, WK_MIN), config)


@CheckRegistry.register(CheckId.DOLLAR_RATIO, k_min=DOLLAR_K_MIN, fibonacci_sized=True)
def check_ratio(params: CheckParams, config: RuntimeConfig) -> List[VerifyReport]:
    """v = rev(fibonacci(2k+1)) keeps r(v) = 2 while r_$(v) is 2k+2 or 2k+3."""
    k = _k(params, DOLLAR_K_MIN)
    v = reverse_fibonacci(2 * k + 1)
    runs = r(v, config.builder)
    runs_dollar = r_dollar(v, config.builder)
    ratio = Ratio.of(runs_dollar, runs)
    name = f"rev(fibonacci({2 * k + 1}))"
    return [
        count_report(CheckId.DOLLAR_RATIO, {"k": k, "word": name, "measure": "r"}, 2, runs),
        interval_report(
            CheckId.DOLLAR_RATIO,
            {"k": k, "word": name, "measure": "r_$"},
            2 * k + 2,
            2 * k + 3,
            runs_dollar,
            detail=f"r_$/r = {ratio.numerator}/{ratio.denominator}",
        ),
    ]


@CheckRegistry.register(CheckId.DOLLAR_DIFF, k_min=WK_MIN)
def check_difference(params: CheckParams, config: RuntimeConfig) -> List[VerifyReport]:
    """r_$(w_k) - r(w_k) = 2k - 4."""
    k = _k(params, WK_MIN)
    word = wk_word(k)
    return [
        count_report(CheckId.DOLLAR_DIFF, {"k": k, "word": f"w_{k}"}, 2 * k - 4,
                     r_dollar(word, config.builder) - r(word, config.builder)),
    ]


def verify_dollar(k: int, config: Optional[RuntimeConfig] = None) -> List[VerifyReport]:
    """Every end-marker check applicable at ``k``; w_k checks need k > 5.

    Raises:
        ParameterError: If ``k < 2``.
    """
    if k < DOLLAR_K_MIN:
        raise ParameterError(f"end-marker checks need k >= {DOLLAR_K_MIN}, got {k}")
    config = config or RuntimeConfig.from_env()
    params = CheckParams(k=k)
    reports: List[VerifyReport] = []
    for registered in CheckRegistry.registered():
        if not registered.check_id.value.startswith("dollar."):
            continue
        if k >= registered.k_min:
            reports.extend(registered.run(params, config))
    return reports
