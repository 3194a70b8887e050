"""Tests for the w_k block table."""

import pytest

from bwtcat.config import RuntimeConfig
from bwtcat.enums.wk_variant import WkVariant
from bwtcat.errors import ParameterError
from bwtcat.verify import expected_table2, table2


@pytest.mark.parametrize("k", [6, 7, 8])
def test_observed_matches_expected(k: int, config: RuntimeConfig) -> None:
    """Test that the computed table equals the closed-form table."""
    assert table2(k, config) == expected_table2(k)


def test_table_shape(config: RuntimeConfig) -> None:
    """Test one row per variant and one block per prefix."""
    table = table2(6, config)
    assert [row.variant for row in table.rows] == list(WkVariant)
    assert all(len(row.blocks) == len(table.prefixes) for row in table.rows)
    assert [row.runs for row in table.rows][:1] == [24]


def test_to_tsv() -> None:
    """Test the tab-separated rendering."""
    tsv = expected_table2(6).to_tsv()
    lines = tsv.split("\n")
    assert tsv.endswith("\n")
    assert lines[0].split("\t")[0] == "word"
    assert lines[0].split("\t")[-1] == "r"
    assert lines[1].startswith("w_k\t")
    assert lines[1].endswith("\t24")
    assert len(lines) == 1 + len(WkVariant) + 1


def test_table_bound(config: RuntimeConfig) -> None:
    """Test that w_k tables need k > 5."""
    with pytest.raises(ParameterError):
        table2(5, config)
