"""Exhaustive single-edit sensitivity scans.

Every insertion, deletion and substitution over the policy's alphabet is applied to the
word and both run measures are recomputed. Substitutions that rewrite the symbol already
present are recorded as no-ops and do not take part in the maxima.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field

from bwtcat.config import RuntimeConfig
from bwtcat.core.symbols import WordLike, require_word
from bwtcat.enums.alphabet_policy import AlphabetPolicy
from bwtcat.enums.ca_builder import CABuilder
from bwtcat.errors import ParameterError
from bwtcat.sensitivity.edit_op import EditOp, Ratio
from bwtcat.sensitivity.effects import apply_edit, is_noop, measure
from bwtcat.validators.word_validator import SENTINEL_BYTE


class EditRecord(BaseModel):
    """Outcome of one edit.

    Attributes:
        op: The edit
        noop: True for a substitution by the symbol already present
        new_r: r of the edited word, None when it is empty
        new_r_dollar: r_$ of the edited word, None when undefined
    """

    model_config = ConfigDict(frozen=True)

    op: EditOp
    noop: bool = False
    new_r: Optional[int] = Field(default=None, ge=1)
    new_r_dollar: Optional[int] = Field(default=None, ge=1)


class SensitivityExtremes(BaseModel):
    """Largest additive and multiplicative change of one measure.

    Attributes:
        base: The measure on the unedited word
        max_additive: Largest ``new - base`` over effective edits
        argmax_additive: First edit, in record order, reaching ``max_additive``
        max_multiplicative: Largest ``new / base`` over effective edits
        argmax_multiplicative: First edit, in record order, reaching it
    """

    model_config = ConfigDict(frozen=True)

    base: int = Field(ge=1)
    max_additive: Optional[int] = None
    argmax_additive: Optional[EditOp] = None
    max_multiplicative: Optional[Ratio] = None
    argmax_multiplicative: Optional[EditOp] = None


class SensitivityReport(BaseModel):
    """Result of an exhaustive edit scan.

    Attributes:
        policy: Alphabet policy the edits were drawn from
        alphabet: Byte values used for insertions and substitutions
        word_length: Length of the scanned word
        base_r: r of the scanned word
        base_r_dollar: r_$ of the scanned word, None if it contains the reserved byte
        records: Every enumerated edit, sorted by kind, position and symbol
        r: Extremes of r
        r_dollar: Extremes of r_$, None when r_$ is undefined
    """

    model_config = ConfigDict(frozen=True)

    policy: AlphabetPolicy
    alphabet: Tuple[int, ...]
    word_length: int = Field(ge=1)
    base_r: int = Field(ge=1)
    base_r_dollar: Optional[int] = Field(default=None, ge=1)
    records: Tuple[EditRecord, ...]
    r: SensitivityExtremes
    r_dollar: Optional[SensitivityExtremes] = None

    @computed_field
    @property
    def effective_count(self) -> int:
        """Number of records that are not no-op substitutions."""
        return sum(1 for record in self.records if not record.noop)

    @property
    def max_additive(self) -> Optional[int]:
        return self.r.max_additive

    @property
    def max_multiplicative(self) -> Optional[Ratio]:
        return self.r.max_multiplicative


def alphabet_for(w: bytes, policy: AlphabetPolicy) -> List[int]:
    """Byte values a scan of ``w`` may write.

    The fresh policy adds the nearest byte below the word's least symbol and the nearest
    byte above its greatest one, skipping the reserved ``$`` byte.
    """
    symbols = sorted(set(w))
    if policy is AlphabetPolicy.WORD_ALPHABET:
        return symbols
    below = symbols[0] - 1
    if below == SENTINEL_BYTE:
        below -= 1
    above = symbols[-1] + 1
    if above == SENTINEL_BYTE:
        above += 1
    fresh = [value for value in (below, above) if 0 <= value <= 255]
    return sorted(set(symbols) | set(fresh))


def enumerate_edits(w: bytes, alphabet: Sequence[int]) -> List[EditOp]:
    """All edits of ``w`` over ``alphabet``, in record order."""
    n = len(w)
    ops = [EditOp.insert(pos, sym) for pos in range(n + 1) for sym in alphabet]
    ops += [EditOp.delete(pos) for pos in range(n)]
    ops += [EditOp.substitute(pos, sym) for pos in range(n) for sym in alphabet]
    return sorted(ops, key=lambda op: op.sort_key)


def _extremes(
    base: int, records: Sequence[EditRecord], dollar: bool
) -> SensitivityExtremes:
    best_add: Optional[int] = None
    best_mul: Optional[Fraction] = None
    arg_add: Optional[EditOp] = None
    arg_mul: Optional[EditOp] = None
    for record in records:
        value = record.new_r_dollar if dollar else record.new_r
        if record.noop or value is None:
            continue
        if best_add is None or value - base > best_add:
            best_add, arg_add = value - base, record.op
        if best_mul is None or Fraction(value, base) > best_mul:
            best_mul, arg_mul = Fraction(value, base), record.op
    return SensitivityExtremes(
        base=base,
        max_additive=best_add,
        argmax_additive=arg_add,
        max_multiplicative=None if best_mul is None else Ratio.from_fraction(best_mul),
        argmax_multiplicative=arg_mul,
    )


def scan_edits(
    w: WordLike,
    alphabet_policy: AlphabetPolicy = AlphabetPolicy.WORD_ALPHABET,
    parallel: bool = False,
    workers: Optional[int] = None,
    builder: Optional[CABuilder] = None,
) -> SensitivityReport:
    """Apply every single edit to ``w`` and record r and r_$ of the result.

    Args:
        w: Word of length at least 2
        alphabet_policy: Which symbols insertions and substitutions may use
        parallel: Evaluate edits on a thread pool; the report is identical either way
        workers: Pool size, defaulting to the configured worker count
        builder: CA builder; the environment decides when omitted

    Returns:
        The report, records in kind, position, symbol order.

    Raises:
        ParameterError: If ``w`` is shorter than 2.
    """
    word = require_word(w, "scan_edits")
    if len(word) < 2:
        raise ParameterError(f"scan needs a word of length at least 2, got {len(word)}")
    alphabet = alphabet_for(word, alphabet_policy)
    ops = enumerate_edits(word, alphabet)
    logging.debug(f"Scanning {len(ops)} edits of a word of length {len(word)}")
    base_r, base_dollar = measure(word, builder)

    def evaluate(op: EditOp) -> EditRecord:
        new_r, new_dollar = measure(apply_edit(word, op), builder)
        if base_dollar is None:
            new_dollar = None
        return EditRecord(
            op=op, noop=is_noop(word, op), new_r=new_r, new_r_dollar=new_dollar
        )

    if parallel:
        pool_size = workers or RuntimeConfig.from_env().workers
        with ThreadPoolExecutor(max_workers=pool_size) as pool:
            records = list(pool.map(evaluate, ops))
    else:
        records = [evaluate(op) for op in ops]

    return SensitivityReport(
        policy=alphabet_policy,
        alphabet=tuple(alphabet),
        word_length=len(word),
        base_r=base_r,
        base_r_dollar=base_dollar,
        records=tuple(records),
        r=_extremes(base_r, records, dollar=False),
        r_dollar=None if base_dollar is None else _extremes(base_dollar, records, True),
    )
