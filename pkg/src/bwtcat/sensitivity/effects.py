"""Applying edits and measuring their effect on r and r_$."""

import logging
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field

from bwtcat.core.symbols import WordLike, as_word, require_word
from bwtcat.core.transform import r, r_dollar
from bwtcat.enums.ca_builder import CABuilder
from bwtcat.enums.edit_kind import EditKind
from bwtcat.errors import EditRangeError
from bwtcat.sensitivity.edit_op import EditOp, Ratio
from bwtcat.validators.edit_validator import EditOpValidator
from bwtcat.validators.word_validator import WordValidator

_edit_validator = EditOpValidator()
_word_validator = WordValidator()


class EditEffect(BaseModel):
    """Run counts before and after one edit.

    ``r_after`` is None when the edit empties the word; the r_$ fields are None when
    the word contains the byte reserved for ``$``.
    """

    model_config = ConfigDict(frozen=True)

    r_before: int = Field(ge=1)
    r_after: Optional[int] = Field(default=None, ge=1)
    r_dollar_before: Optional[int] = Field(default=None, ge=1)
    r_dollar_after: Optional[int] = Field(default=None, ge=1)


class RComparison(BaseModel):
    """Both run measures of one word.

    Attributes:
        r: Runs of the rotation BWT
        r_dollar: Runs of the end-marker BWT
    """

    model_config = ConfigDict(frozen=True)

    r: int = Field(ge=1)
    r_dollar: int = Field(ge=1)

    @computed_field
    @property
    def difference(self) -> int:
        return self.r_dollar - self.r

    @computed_field
    @property
    def ratio(self) -> Ratio:
        """r_$ / r in lowest terms."""
        return Ratio.of(self.r_dollar, self.r)


def is_noop(w: WordLike, op: EditOp) -> bool:
    """A substitution that writes the symbol already present."""
    word = as_word(w)
    return (
        op.kind is EditKind.SUBSTITUTE
        and op.pos < len(word)
        and word[op.pos] == op.sym
    )


def apply_edit(w: WordLike, op: EditOp, require_nonempty: bool = False) -> bytes:
    """Apply one edit.

    Args:
        w: The word to edit
        op: The edit
        require_nonempty: Reject edits that produce the empty word

    Returns:
        The edited word.

    Raises:
        EditRangeError: If the position is out of range, or the result would be empty
            while ``require_nonempty`` is set.
    """
    word = as_word(w)
    if not _edit_validator.validate(op, len(word)):
        raise EditRangeError(
            f"{op.kind.value} position {op.pos} out of range for length {len(word)}"
        )
    match op.kind:
        case EditKind.INSERT:
            edited = word[: op.pos] + bytes([op.sym]) + word[op.pos :]
        case EditKind.DELETE:
            edited = word[: op.pos] + word[op.pos + 1 :]
        case EditKind.SUBSTITUTE:
            edited = word[: op.pos] + bytes([op.sym]) + word[op.pos + 1 :]
    if require_nonempty and not edited:
        raise EditRangeError("edit produces the empty word, whose r is undefined")
    return edited


def measure(
    w: bytes, builder: Optional[CABuilder] = None
) -> tuple[Optional[int], Optional[int]]:
    """``(r, r_dollar)`` of a word, None where the measure is undefined."""
    value_r = r(w, builder) if w else None
    value_dollar = r_dollar(w, builder) if _word_validator.validate_dollar_free(w) else None
    return value_r, value_dollar


def edit_effect(
    w: WordLike, op: EditOp, builder: Optional[CABuilder] = None
) -> EditEffect:
    """Run counts of ``w`` and of the edited word.

    Raises:
        EmptyWordError: If ``w`` is empty.
        EditRangeError: If the edit is out of range or empties the word.
    """
    word = require_word(w, "edit_effect")
    edited = apply_edit(word, op, require_nonempty=True)
    logging.debug(f"Measuring {op.kind.value} at {op.pos} on a word of length {len(word)}")
    r_before, dollar_before = measure(word, builder)
    r_after, dollar_after = measure(edited, builder)
    return EditEffect(
        r_before=r_before,
        r_after=r_after,
        r_dollar_before=dollar_before,
        r_dollar_after=dollar_after,
    )


def compare_r_rdollar(w: WordLike, builder: Optional[CABuilder] = None) -> RComparison:
    """r and r_$ of a non-empty word with their difference and ratio."""
    word = require_word(w, "compare_r_rdollar")
    return RComparison(r=r(word, builder), r_dollar=r_dollar(word, builder))
