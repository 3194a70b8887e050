"""Report builders shared by the check modules."""

import logging
from typing import Dict, Optional, Sequence, Tuple

from bwtcat.config import RuntimeConfig
from bwtcat.core.blocks import BlockIndex
from bwtcat.core.transform import bwt, bwt_dollar
from bwtcat.enums.ca_builder import CABuilder
from bwtcat.enums.check_id import CheckId
from bwtcat.verify.report import Interval, Value, VerifyReport, render_word

Params = Dict[str, Value]
RunPair = Tuple[int, int]


def count_report(
    check_id: CheckId, params: Params, expected: int, observed: int, detail: str = ""
) -> VerifyReport:
    return VerifyReport(
        check_id=check_id, params=params, expected=expected, observed=observed, detail=detail
    )


def interval_report(
    check_id: CheckId,
    params: Params,
    lo: int,
    hi: Optional[int],
    observed: int,
    detail: str = "",
) -> VerifyReport:
    return VerifyReport(
        check_id=check_id,
        params=params,
        expected=Interval(lo=lo, hi=hi),
        observed=observed,
        detail=detail,
    )


def oracle_transform(word: bytes, dollar: bool, config: RuntimeConfig) -> Tuple[bytes, str]:
    """BWT from the configured builder, cross-checked by the naive builder when small.

    Returns:
        The observed BWT, or a marker that cannot equal any word when the builders
        disagree, and the oracle status for the report detail.
    """
    transform = bwt_dollar if dollar else bwt
    observed = transform(word, config.builder).bwt
    if len(observed) > config.oracle_limit:
        return observed, f"oracle skipped (n={len(observed)} > {config.oracle_limit})"
    if config.builder is CABuilder.NAIVE:
        return observed, "oracle path"
    oracle = transform(word, CABuilder.NAIVE).bwt
    if oracle != observed:
        logging.error(f"Fast path and oracle disagree on a word of length {len(word)}")
        return b"<fast path and oracle disagree>", "oracle mismatch"
    return observed, "oracle-confirmed"


def word_report(
    check_id: CheckId,
    params: Params,
    word: bytes,
    expected_bwt: bytes,
    config: RuntimeConfig,
    dollar: bool = False,
    detail: str = "",
    runs: Optional[RunPair] = None,
) -> VerifyReport:
    """Compare a closed-form BWT with the computed one.

    With ``runs`` given as (closed form, computed), the run count is written on both
    sides, so a wrong count fails the report even when the words agree.
    """
    observed, oracle_note = oracle_transform(word, dollar, config)
    notes = "; ".join(part for part in (detail, oracle_note, run_note(runs)) if part)
    return VerifyReport(
        check_id=check_id,
        params=params,
        expected=with_runs(render_word(expected_bwt), runs, 0),
        observed=with_runs(render_word(observed), runs, 1),
        detail=notes,
    )


def block_report(
    check_id: CheckId,
    params: Params,
    word: bytes,
    table: Sequence[Tuple[bytes, bytes]],
    config: RuntimeConfig,
    dollar: bool = False,
    detail: str = "",
    runs: Optional[RunPair] = None,
) -> VerifyReport:
    """Compare a block table with bwt_block output, block by block.

    Both sides are rendered as ``|``-separated blocks. When the computed blocks do not
    tile the transform, a partition marker is appended to the observed side. ``runs``
    works as in :func:`word_report`.
    """
    index = BlockIndex(word, dollar=dollar, builder=config.builder)
    observed_blocks = [index.block(prefix) for prefix, _ in table]
    mismatched = [
        prefix.decode("latin-1")
        for (prefix, expected), got in zip(table, observed_blocks)
        if expected != got
    ]
    full, oracle_note = oracle_transform(word, dollar, config)
    observed = render_blocks(observed_blocks)
    if b"".join(observed_blocks) != full:
        observed += "|<blocks do not tile the transform>"
    notes = [detail, oracle_note, run_note(runs)]
    if mismatched:
        notes.append("mismatched blocks: " + ",".join(mismatched))
    return VerifyReport(
        check_id=check_id,
        params=params,
        expected=with_runs(render_blocks([block for _, block in table]), runs, 0),
        observed=with_runs(observed, runs, 1),
        detail="; ".join(part for part in notes if part),
    )


def render_blocks(blocks: Sequence[bytes]) -> str:
    return "|".join(render_word(block) for block in blocks)


def with_runs(text: str, runs: Optional[RunPair], side: int) -> str:
    return text if runs is None else f"{text}; r={runs[side]}"


def run_note(runs: Optional[RunPair]) -> str:
    if runs is None or runs[0] == runs[1]:
        return ""
    return f"run count {runs[1]}, closed form {runs[0]}"
