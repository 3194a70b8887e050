"""Block tables of w_k and its variants.

One row per word variant, one column per block prefix and a final run-count column.
Observed rows come from bwt_block on the generated words, expected rows from the
closed forms; the two tables are equal for every k > 5.
"""

from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from bwtcat.config import RuntimeConfig
from bwtcat.core.blocks import BlockIndex
from bwtcat.core.transform import count_runs
from bwtcat.core.symbols import encode
from bwtcat.enums.wk_variant import WkVariant
from bwtcat.families.wk import wk_prefixes, wk_variant_word
from bwtcat.verify import closed_forms

TSV_SEPARATOR = "\t"


class TableRow(BaseModel):
    """Blocks of one word variant.

    Attributes:
        variant: Which edited or end-marked form of w_k the row describes
        blocks: Block per prefix, in prefix order; empty when no rotation has the prefix
        runs: r of the row's word, r_$ for end-marked rows
    """

    model_config = ConfigDict(frozen=True)

    variant: WkVariant
    blocks: Tuple[str, ...]
    runs: int = Field(ge=1)


class BlockTable(BaseModel):
    """The full table for one k."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=6)
    prefixes: Tuple[str, ...]
    rows: Tuple[TableRow, ...]

    def to_tsv(self) -> str:
        """Header line of prefixes followed by one line per row, tab separated."""
        lines = [TSV_SEPARATOR.join(("word", *self.prefixes, "r"))]
        for row in self.rows:
            lines.append(TSV_SEPARATOR.join((row.variant.value, *row.blocks, str(row.runs))))
        return "\n".join(lines) + "\n"


def _text(word: bytes) -> str:
    return word.decode("latin-1")


def table2(k: int, config: Optional[RuntimeConfig] = None) -> BlockTable:
    """Observed block table of w_k.

    Raises:
        ParameterError: If ``k <= 5``.
    """
    config = config or RuntimeConfig.from_env()
    prefixes = wk_prefixes(k)
    rows: List[TableRow] = []
    for variant in WkVariant:
        index = BlockIndex(
            wk_variant_word(k, variant), dollar=variant.uses_dollar, builder=config.builder
        )
        rows.append(TableRow(
            variant=variant,
            blocks=tuple(_text(index.block(prefix)) for prefix in prefixes),
            runs=count_runs(encode(index.bwt)),
        ))
    return BlockTable(k=k, prefixes=tuple(_text(p) for p in prefixes), rows=tuple(rows))


def expected_table2(k: int) -> BlockTable:
    """Block table of w_k evaluated from the closed forms."""
    prefixes = wk_prefixes(k)
    rows = [
        TableRow(
            variant=variant,
            blocks=tuple(_text(block) for _, block in closed_forms.wk_block_table(k, variant)),
            runs=closed_forms.wk_runs(k, variant),
        )
        for variant in WkVariant
    ]
    return BlockTable(k=k, prefixes=tuple(_text(p) for p in prefixes), rows=tuple(rows))
