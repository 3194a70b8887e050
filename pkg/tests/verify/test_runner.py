"""Tests for verification sweeps."""

from typing import TYPE_CHECKING

import pytest

from bwtcat.config import RuntimeConfig
from bwtcat.enums.check_id import CheckId
from bwtcat.errors import ParameterError
from bwtcat.verify import CheckRegistry, run_check, verify_all

if TYPE_CHECKING:
    from pytest_mock import MockerFixture


def test_verify_all_at_six(config: RuntimeConfig) -> None:
    """Test a one-value sweep that runs every check."""
    summary = verify_all(range(6, 7), config)
    assert summary.total >= 30
    assert summary.all_passed, [report for report in summary.reports if not report.passed]
    assert not summary.skipped
    order = [list(CheckId).index(report.check_id) for report in summary.reports]
    assert order == sorted(order)


def test_verify_all_records_skips(config: RuntimeConfig) -> None:
    """Test that checks below their bound are skipped, not failed."""
    summary = verify_all(range(3, 4), config)
    skipped = {check.check_id for check in summary.skipped}
    assert CheckId.WK_BWT in skipped
    assert CheckId.DOLLAR_DIFF in skipped
    assert CheckId.FIB_DELETE not in skipped
    assert summary.all_passed


def test_verify_all_fibonacci_cap() -> None:
    """Test that Fibonacci-sized checks stop at fib_k_max."""
    summary = verify_all(range(6, 7), RuntimeConfig(fib_k_max=5))
    skipped = {check.check_id for check in summary.skipped}
    assert CheckId.FIB_APPEND in skipped
    assert CheckId.DOLLAR_RATIO in skipped
    assert CheckId.WK_BWT not in skipped


def test_verify_all_empty_range(config: RuntimeConfig) -> None:
    """Test that an empty sweep is an empty, passing summary."""
    summary = verify_all(range(7, 7), config)
    assert summary.total == 0
    assert summary.all_passed


def test_verify_all_parallel_matches_serial(config: RuntimeConfig) -> None:
    """Test that the thread pool keeps report order."""
    serial = verify_all(range(3, 5), config)
    parallel = verify_all(range(3, 5), RuntimeConfig(workers=4), parallel=True)
    assert parallel == serial


def test_crashing_check_becomes_failure(config: RuntimeConfig, mocker: "MockerFixture") -> None:
    """Test that an exception inside a check is reported, not raised."""
    registered = CheckRegistry.get(CheckId.FIB_SUBST)
    crashing = mocker.Mock(side_effect=RuntimeError("boom"))
    mocker.patch.dict(
        CheckRegistry._checks,
        {CheckId.FIB_SUBST: type(registered)(CheckId.FIB_SUBST, crashing, registered.k_min, True)},
    )
    summary = verify_all(range(3, 4), config)
    [crash] = [report for report in summary.reports if report.check_id is CheckId.FIB_SUBST]
    assert not crash.passed
    assert crash.observed == "RuntimeError: boom"
    assert crash.detail == "check raised"
    assert summary.failed == 1


def test_run_check(config: RuntimeConfig) -> None:
    """Test running one check by its string identifier."""
    [report] = run_check("wk.bwt", 6, config=config)
    assert report.passed


def test_run_check_errors(config: RuntimeConfig) -> None:
    """Test unknown identifiers and out-of-range k."""
    with pytest.raises(ValueError, match="No implementation for check"):
        run_check("wk.rotate", 6, config=config)
    with pytest.raises(ParameterError, match="needs k >= 6"):
        run_check(CheckId.WK_BWT, 5, config=config)
