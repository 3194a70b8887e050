"""Shared pytest fixtures for testing."""

from typing import Dict, List
from pathlib import Path
import json
import pytest
from typing import TYPE_CHECKING

from bwtcat.config import RuntimeConfig
from bwtcat.enums.ca_builder import CABuilder

if TYPE_CHECKING:
    from _pytest.fixtures import FixtureRequest
    from _pytest.monkeypatch import MonkeyPatch


# Get the directory where conftest.py is located
TEST_DIR = Path(__file__).parent
# Define the directory containing the JSON test data
JSON_DIR = TEST_DIR / "json"


@pytest.fixture
def worked_examples() -> List[Dict]:
    """
    Fixture providing words with known transforms.

    Returns:
        List of dictionaries with word, conjugate array, BWT and run counts
    """
    json_path = JSON_DIR / "worked_examples.json"
    with json_path.open("r") as f:
        return json.load(f)["transforms"]


@pytest.fixture
def figure_edits() -> List[Dict]:
    """
    Fixture providing single edits of fibonacci(6) and their effect.

    Returns:
        List of dictionaries with the edit, the edited BWT when known, and r
    """
    json_path = JSON_DIR / "worked_examples.json"
    with json_path.open("r") as f:
        return json.load(f)["fibonacci_edits"]


@pytest.fixture
def config() -> RuntimeConfig:
    """Default configuration: doubling builder with the oracle cross-check."""
    return RuntimeConfig()


@pytest.fixture
def oracle_config() -> RuntimeConfig:
    """Configuration forcing the naive rotation sort."""
    return RuntimeConfig(oracle=True)


@pytest.fixture(params=[CABuilder.DOUBLING, CABuilder.NAIVE])
def builder(request: "FixtureRequest") -> CABuilder:
    """Both conjugate array builders."""
    return request.param


@pytest.fixture(autouse=True)
def clean_env(monkeypatch: "MonkeyPatch") -> None:
    """Keep tests independent of BWTCAT_* variables set in the shell."""
    for name in ("BWTCAT_ORACLE", "BWTCAT_ORACLE_LIMIT", "BWTCAT_FIB_K_MAX", "BWTCAT_WORKERS"):
        monkeypatch.delenv(name, raising=False)
