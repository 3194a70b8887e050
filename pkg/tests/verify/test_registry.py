"""Tests for the check registry."""

import pytest

from bwtcat.config import RuntimeConfig
from bwtcat.enums.check_id import CheckId
from bwtcat.verify.registry import CheckParams, CheckRegistry
from bwtcat.verify.report import VerifyReport


@pytest.fixture
def clear_registry():
    """Fixture to clear check registrations between tests."""
    original = CheckRegistry._checks.copy()
    CheckRegistry._checks.clear()
    yield
    CheckRegistry._checks = original


def test_every_check_is_registered() -> None:
    """Test that importing the package registers every identifier."""
    assert [check.check_id for check in CheckRegistry.registered()] == list(CheckId)


def test_register_and_get(clear_registry) -> None:
    """Test registering a check function."""
    @CheckRegistry.register(CheckId.TFAM, k_min=3)
    def constant(params: CheckParams, config: RuntimeConfig):
        return [VerifyReport(check_id=CheckId.TFAM, expected=params.k, observed=params.k)]

    registered = CheckRegistry.get(CheckId.TFAM)
    assert registered.run is constant
    assert registered.k_min == 3
    assert [check.check_id for check in CheckRegistry.registered()] == [CheckId.TFAM]


def test_get_unknown(clear_registry) -> None:
    """Test that missing identifiers raise ValueError."""
    with pytest.raises(ValueError, match="No implementation for check"):
        CheckRegistry.get(CheckId.WK_BWT)


def test_skip_reason() -> None:
    """Test the lower bound and the Fibonacci sweep cap."""
    config = RuntimeConfig(fib_k_max=5)
    fib = CheckRegistry.get(CheckId.FIB_DELETE)
    assert fib.skip_reason(2, config) == "needs k >= 3"
    assert fib.skip_reason(5, config) is None
    assert "capped" in fib.skip_reason(6, config)
    wk = CheckRegistry.get(CheckId.WK_BWT)
    assert wk.skip_reason(40, config) is None


def test_check_params_bounds() -> None:
    """Test that k is non-negative and i positive."""
    assert CheckParams(k=0).i is None
    with pytest.raises(ValueError):
        CheckParams(k=-1)
    with pytest.raises(ValueError):
        CheckParams(k=3, i=0)
