"""Verification report models."""

from typing import Dict, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, computed_field

from bwtcat.core.symbols import encode
from bwtcat.core.transform import encode_runs
from bwtcat.enums.check_id import CheckId

LITERAL_LIMIT = 64


def render_word(word: bytes) -> str:
    """Text form of a word for reports.

    Words up to LITERAL_LIMIT symbols are written out; longer ones as runs, ``b^5 a^8``.
    """
    if len(word) <= LITERAL_LIMIT:
        return word.decode("latin-1")
    runs = encode_runs(encode(word))
    return " ".join(f"{run.symbol.decode('latin-1')}^{run.length}" for run in runs)


class Interval(BaseModel):
    """Closed integer interval; ``hi`` None means unbounded above."""

    model_config = ConfigDict(frozen=True)

    lo: int
    hi: Optional[int] = None

    def contains(self, value: int) -> bool:
        return value >= self.lo and (self.hi is None or value <= self.hi)


Value = Union[int, str]


class VerifyReport(BaseModel):
    """Outcome of one closed-form check.

    ``pass`` is derived: exact equality for counts and words, membership when the
    expectation is an Interval.

    Attributes:
        check_id: Stable identifier of the check
        params: Parameters the check ran with
        expected: Closed-form value, word or interval
        observed: Value or word computed from the generated word
        detail: Free-text context such as oracle status
    """

    model_config = ConfigDict(frozen=True)

    check_id: CheckId
    params: Dict[str, Value] = Field(default_factory=dict)
    expected: Union[Interval, int, str]
    observed: Value
    detail: str = ""

    @computed_field(alias="pass")
    @property
    def passed(self) -> bool:
        """Whether the observed value satisfies the expectation."""
        if isinstance(self.expected, Interval):
            return isinstance(self.observed, int) and self.expected.contains(self.observed)
        return type(self.expected) is type(self.observed) and self.expected == self.observed


class SkippedCheck(BaseModel):
    """A registered check outside its parameter range for one sweep value."""

    model_config = ConfigDict(frozen=True)

    check_id: CheckId
    k: int
    reason: str


class VerifySummary(BaseModel):
    """Aggregated reports of a verification sweep."""

    model_config = ConfigDict(frozen=True)

    reports: Tuple[VerifyReport, ...] = ()
    skipped: Tuple[SkippedCheck, ...] = ()

    @computed_field
    @property
    def total(self) -> int:
        return len(self.reports)

    @computed_field
    @property
    def passed(self) -> int:
        return sum(1 for report in self.reports if report.passed)

    @computed_field
    @property
    def failed(self) -> int:
        return self.total - self.passed

    @property
    def all_passed(self) -> bool:
        return self.failed == 0
