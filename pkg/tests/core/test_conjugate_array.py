"""Tests for conjugate array construction."""

from typing import TYPE_CHECKING, Dict, List

import numpy as np
import pytest

from bwtcat.core.conjugate_array import (
    ConjugateArray,
    conjugate_array,
    doubling_conjugate_array,
    naive_conjugate_array,
)
from bwtcat.core.symbols import encode
from bwtcat.enums.ca_builder import CABuilder
from bwtcat.errors import EmptyWordError
from bwtcat.families.standard import fibonacci

if TYPE_CHECKING:
    from _pytest.monkeypatch import MonkeyPatch
    from pytest_mock.plugin import MockerFixture


def test_conjugate_array_worked_examples(
    worked_examples: List[Dict], builder: CABuilder
) -> None:
    """Test the conjugate arrays of the worked examples with both builders."""
    for example in worked_examples:
        ca = conjugate_array(example["word"].encode(), builder)
        assert ca.to_list() == example["conjugate_array"]


@pytest.mark.parametrize("word", [
    b"aaaa",
    b"abab",
    b"abcabc",
    b"banana",
    b"mississippi",
    b"\x00\xff\x00",
])
def test_builders_agree(word: bytes) -> None:
    """Test that prefix doubling matches the rotation sort, including periodic words."""
    ranks = encode(word)
    assert np.array_equal(doubling_conjugate_array(ranks), naive_conjugate_array(ranks))


def test_equal_rotations_ordered_by_index() -> None:
    """Test that a periodic word lists equal rotations by start index."""
    assert conjugate_array(b"aaa").to_list() == [0, 1, 2]
    assert conjugate_array(b"abcabc").to_list() == [0, 3, 1, 4, 2, 5]


def test_builders_agree_on_fibonacci() -> None:
    """Test both builders on a Fibonacci word."""
    ranks = encode(fibonacci(15))
    assert np.array_equal(doubling_conjugate_array(ranks), naive_conjugate_array(ranks))


def test_conjugate_array_is_read_only() -> None:
    """Test that the stored order cannot be modified."""
    ca = conjugate_array(b"banana")
    with pytest.raises(ValueError):
        ca.order[0] = 3


def test_conjugate_array_equality() -> None:
    """Test value equality and hashing of conjugate arrays."""
    first = conjugate_array(b"banana")
    second = conjugate_array(b"banana", CABuilder.NAIVE)
    assert first == second
    assert hash(first) == hash(second)
    assert len(first) == 6
    assert first != conjugate_array(b"bananb")
    assert isinstance(first, ConjugateArray)


def test_conjugate_array_rejects_empty_word() -> None:
    """Test that the empty word has no conjugate array."""
    with pytest.raises(EmptyWordError):
        conjugate_array(b"")


def test_environment_selects_naive_builder(
    monkeypatch: "MonkeyPatch", mocker: "MockerFixture"
) -> None:
    """Test that BWTCAT_ORACLE=1 routes construction to the rotation sort."""
    monkeypatch.setenv("BWTCAT_ORACLE", "1")
    naive = mocker.Mock(return_value=np.array([0], dtype=np.int64))
    doubling = mocker.Mock()
    mocker.patch.dict(
        "bwtcat.core.conjugate_array._BUILDERS",
        {CABuilder.NAIVE: naive, CABuilder.DOUBLING: doubling},
    )
    assert conjugate_array(b"a").to_list() == [0]
    naive.assert_called_once()
    doubling.assert_not_called()


def test_explicit_builder_overrides_environment(
    monkeypatch: "MonkeyPatch", mocker: "MockerFixture"
) -> None:
    """Test that an explicit builder wins over the environment."""
    monkeypatch.setenv("BWTCAT_ORACLE", "1")
    doubling = mocker.Mock(return_value=np.array([0, 1], dtype=np.int64))
    mocker.patch.dict(
        "bwtcat.core.conjugate_array._BUILDERS", {CABuilder.DOUBLING: doubling}
    )
    conjugate_array(b"ab", CABuilder.DOUBLING)
    doubling.assert_called_once()


@pytest.mark.slow
def test_builders_agree_on_random_words() -> None:
    """Test prefix doubling against the rotation sort on 10^4 random words up to 512."""
    rng = np.random.default_rng(2024)
    for _ in range(10_000):
        n = int(rng.integers(1, 513))
        sigma = int(rng.integers(1, 5))
        word = bytes(rng.integers(ord("a"), ord("a") + sigma, size=n, dtype=np.uint8))
        ranks = encode(word)
        assert np.array_equal(
            doubling_conjugate_array(ranks), naive_conjugate_array(ranks)
        ), word


def test_many_classes() -> None:
    """Test a word with more than 2^16 distinct rotation prefixes."""
    rng = np.random.default_rng(7)
    word = bytes(rng.integers(0, 256, size=70_000, dtype=np.uint8))
    order = conjugate_array(word).to_list()
    doubled = word + word
    prefixes = [doubled[i : i + 16] for i in order]
    assert sorted(order) == list(range(len(word)))
    assert all(a < b for a, b in zip(prefixes, prefixes[1:]))
