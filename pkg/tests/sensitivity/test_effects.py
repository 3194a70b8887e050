"""Tests for applying edits and measuring their effect."""

from typing import Dict, List

import pytest

from bwtcat.core.transform import bwt
from bwtcat.core.words import conj
from bwtcat.enums.edit_kind import EditKind
from bwtcat.errors import EditRangeError, EmptyWordError
from bwtcat.families.standard import fibonacci
from bwtcat.sensitivity.edit_op import EditOp, Ratio
from bwtcat.sensitivity.effects import (
    apply_edit,
    compare_r_rdollar,
    edit_effect,
    is_noop,
    measure,
)


def _op(edit: Dict) -> EditOp:
    sym = None if edit["char"] is None else ord(edit["char"])
    return EditOp(kind=EditKind(edit["op"]), pos=edit["pos"], sym=sym)


def test_figure_edits(figure_edits: List[Dict]) -> None:
    """Test the three single edits of fibonacci(6) and their run counts."""
    s = fibonacci(6)
    for edit in figure_edits:
        op = _op(edit)
        effect = edit_effect(s, op)
        assert effect.r_before == 2
        assert effect.r_after == edit["r"]
        if edit["bwt"] is not None:
            assert bwt(apply_edit(s, op)).bwt == edit["bwt"].encode()


@pytest.mark.parametrize("op,edited", [
    (EditOp.insert(0, b"x"), b"xabc"),
    (EditOp.insert(3, b"x"), b"abcx"),
    (EditOp.delete(1), b"ac"),
    (EditOp.substitute(2, b"x"), b"abx"),
])
def test_apply_edit(op: EditOp, edited: bytes) -> None:
    """Test the three edit kinds at the word boundaries."""
    assert apply_edit(b"abc", op) == edited


@pytest.mark.parametrize("op", [
    EditOp.insert(4, b"x"),
    EditOp.delete(3),
    EditOp.substitute(3, b"x"),
])
def test_apply_edit_out_of_range(op: EditOp) -> None:
    """Test that positions beyond the word are rejected."""
    with pytest.raises(EditRangeError):
        apply_edit(b"abc", op)


def test_edit_effect_rejects_empty_result() -> None:
    """Test that deleting the only symbol leaves r undefined."""
    with pytest.raises(EditRangeError, match="empty word"):
        edit_effect(b"a", EditOp.delete(0))
    with pytest.raises(EmptyWordError):
        edit_effect(b"", EditOp.insert(0, b"a"))


def test_edit_effect_reserved_byte() -> None:
    """Test that r_$ is undefined once the word contains ``$``."""
    effect = edit_effect(b"ab", EditOp.insert(1, b"$"))
    assert effect.r_dollar_before == 3
    assert effect.r_dollar_after is None
    assert effect.r_after is not None


def test_is_noop() -> None:
    """Test that only same-symbol substitutions are no-ops."""
    assert is_noop(b"ab", EditOp.substitute(0, b"a"))
    assert not is_noop(b"ab", EditOp.substitute(0, b"b"))
    assert not is_noop(b"ab", EditOp.insert(0, b"a"))


def test_measure() -> None:
    """Test both measures, including undefined ones."""
    assert measure(b"catastrophic") == (10, 12)
    assert measure(b"") == (None, 1)
    assert measure(b"a$") == (2, None)


def test_compare_r_rdollar() -> None:
    """Test difference and ratio of r_$ and r."""
    comparison = compare_r_rdollar(b"catastrophic")
    assert comparison.r == 10
    assert comparison.r_dollar == 12
    assert comparison.difference == 2
    assert comparison.ratio == Ratio(numerator=6, denominator=5)


@pytest.mark.parametrize("word", [fibonacci(6), b"catastrophic", b"abba", b"aab"])
@pytest.mark.parametrize("sym", [b"a", b"b", b"z"])
def test_insertions_into_conjugates_agree(word: bytes, sym: bytes) -> None:
    """Test r(wc) = r(cw) = r(ucv) for every split w = vu."""
    n = len(word)
    appended = edit_effect(word, EditOp.insert(n, sym)).r_after
    assert edit_effect(word, EditOp.insert(0, sym)).r_after == appended
    for i in range(n):
        rotated = conj(word, i)
        assert edit_effect(rotated, EditOp.insert(n - i, sym)).r_after == appended, i
