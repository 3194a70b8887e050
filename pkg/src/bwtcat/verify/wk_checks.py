"""Block-by-block BWTs of w_k and of its three single-edit neighbours."""

from typing import List, Optional

from bwtcat.config import RuntimeConfig
from bwtcat.core.transform import r
from bwtcat.enums.check_id import CheckId
from bwtcat.enums.wk_variant import WkVariant
from bwtcat.errors import ParameterError
from bwtcat.families.wk import WK_MIN, wk_variant_word
from bwtcat.verify import closed_forms
from bwtcat.verify.harness import block_report, count_report
from bwtcat.verify.registry import CheckParams, CheckRegistry
from bwtcat.verify.report import VerifyReport

EDIT_CHECKS = {
    CheckId.WK_INS: WkVariant.APPEND_A,
    CheckId.WK_DEL: WkVariant.TRUNCATED,
    CheckId.WK_SUB: WkVariant.TRUNCATED_B,
}


def require_wk(k: int) -> int:
    if k < WK_MIN:
        raise ParameterError(f"w_k defined only for k > 5, got {k}")
    return k


def verify_wk(k: int, config: Optional[RuntimeConfig] = None) -> VerifyReport:
    """Every block of BWT(w_k) and the run count 6k - 12 against their closed forms."""
    require_wk(k)
    config = config or RuntimeConfig.from_env()
    word = wk_variant_word(k, WkVariant.PLAIN)
    return block_report(
        CheckId.WK_BWT,
        {"k": k, "word": WkVariant.PLAIN.value},
        word,
        closed_forms.wk_block_table(k, WkVariant.PLAIN),
        config,
        runs=(closed_forms.wk_runs(k, WkVariant.PLAIN), r(word, config.builder)),
    )


def _edit_reports(check_id: CheckId, k: int, config: RuntimeConfig) -> List[VerifyReport]:
    variant = EDIT_CHECKS[check_id]
    word = wk_variant_word(k, variant)
    params = {"k": k, "word": variant.value}
    edited_runs = r(word, config.builder)
    base_runs = r(wk_variant_word(k, WkVariant.PLAIN), config.builder)
    return [
        count_report(check_id, params, closed_forms.wk_runs(k, variant), edited_runs),
        block_report(check_id, params, word, closed_forms.wk_block_table(k, variant), config),
        count_report(check_id, {**params, "gap": "r(edited) - r(w_k)"}, 2 * k - 8,
                     edited_runs - base_runs),
    ]


@CheckRegistry.register(CheckId.WK_BWT, k_min=WK_MIN)
def check_wk(params: CheckParams, config: RuntimeConfig) -> List[VerifyReport]:
    return [verify_wk(params.k, config)]


@CheckRegistry.register(CheckId.WK_INS, k_min=WK_MIN)
def check_wk_insert(params: CheckParams, config: RuntimeConfig) -> List[VerifyReport]:
    return _edit_reports(CheckId.WK_INS, require_wk(params.k), config)


@CheckRegistry.register(CheckId.WK_DEL, k_min=WK_MIN)
def check_wk_delete(params: CheckParams, config: RuntimeConfig) -> List[VerifyReport]:
    return _edit_reports(CheckId.WK_DEL, require_wk(params.k), config)


@CheckRegistry.register(CheckId.WK_SUB, k_min=WK_MIN)
def check_wk_substitute(params: CheckParams, config: RuntimeConfig) -> List[VerifyReport]:
    return _edit_reports(CheckId.WK_SUB, require_wk(params.k), config)


def verify_wk_edits(k: int, config: Optional[RuntimeConfig] = None) -> List[VerifyReport]:
    """Run count, blocks and additive gap for w_k a, the truncated w_k and it plus b."""
    require_wk(k)
    config = config or RuntimeConfig.from_env()
    reports: List[VerifyReport] = []
    for check_id in EDIT_CHECKS:
        reports.extend(_edit_reports(check_id, k, config))
    return reports
