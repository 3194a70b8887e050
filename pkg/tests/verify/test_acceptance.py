"""Full sweeps over the closed forms."""

import pytest

from bwtcat.config import RuntimeConfig
from bwtcat.core.transform import r, r_dollar
from bwtcat.enums.wk_variant import WkVariant
from bwtcat.families.standard import fibonacci
from bwtcat.families.wk import wk_variant_word, wk_word
from bwtcat.verify import (
    expected_table2,
    table2,
    verify_all,
    verify_fibonacci_catastrophes,
    verify_t_family,
    verify_wk,
    wk_runs,
)

pytestmark = pytest.mark.slow


def test_sweep_three_to_twelve(config: RuntimeConfig) -> None:
    """Test every registered check for k = 3..12."""
    summary = verify_all(range(3, 13), config, parallel=True)
    failed = [report for report in summary.reports if not report.passed]
    assert not failed, failed
    assert summary.total > 300


@pytest.mark.parametrize("k", [13, 14])
def test_fibonacci_above_sweep(k: int, config: RuntimeConfig) -> None:
    """Test the Fibonacci checks at the two orders the k = 3..12 sweep leaves out."""
    reports = verify_fibonacci_catastrophes(k, config)
    failed = [report for report in reports if not report.passed]
    assert not failed, failed


def test_fibonacci_34_has_two_runs() -> None:
    """Test the doubling builder on a Fibonacci word of about nine million symbols."""
    assert r(fibonacci(34)) == 2


@pytest.mark.parametrize("k", range(6, 16))
def test_tables(k: int, config: RuntimeConfig) -> None:
    """Test the computed w_k tables against the closed forms."""
    assert table2(k, config) == expected_table2(k)


def test_wk_run_counts_to_forty(config: RuntimeConfig) -> None:
    """Test the run counts and lengths of w_k and its rows for k = 6..40."""
    for k in range(6, 41):
        assert len(wk_word(k)) == (3 * k * k + 7 * k - 18) // 2
        for variant in WkVariant:
            word = wk_variant_word(k, variant)
            runs = r_dollar(word) if variant.uses_dollar else r(word)
            assert runs == wk_runs(k, variant), (k, variant)
        assert verify_wk(k, config).passed


def test_t_family_grid(config: RuntimeConfig) -> None:
    """Test every member with 3 <= i <= 30 and 1 <= k <= 4."""
    for i in range(3, 31):
        for k in range(1, 5):
            assert verify_t_family(i, k, config).passed, (i, k)
