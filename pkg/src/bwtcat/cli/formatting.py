"""Output views and emitters.

Every command renders to ``bytes`` so raw input bytes reach stdout unchanged. JSON views
are pydantic models with a fixed field order; bytes are carried as latin-1 text, one
character per byte.
"""

from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from bwtcat.core.transform import Transform
from bwtcat.sensitivity.edit_op import Ratio
from bwtcat.sensitivity.scan import SensitivityReport
from bwtcat.verify.report import Interval, VerifyReport, VerifySummary

TSV_SEPARATOR = b"\t"


def text(value: bytes) -> str:
    return value.decode("latin-1")


def line(*fields: bytes, separator: bytes = b" ") -> bytes:
    return separator.join(fields) + b"\n"


def optional_int(value: Optional[int]) -> bytes:
    return b"-" if value is None else str(value).encode()


class TransformView(BaseModel):
    """JSON form of a transform: ``{"bwt", "runs", "rle"}``."""

    model_config = ConfigDict(frozen=True)

    bwt: str
    runs: int
    rle: List[Tuple[str, int]]

    @classmethod
    def of(cls, transform: Transform) -> "TransformView":
        return cls(
            bwt=text(transform.bwt),
            runs=transform.run_count,
            rle=[(text(run.symbol), run.length) for run in transform.rle],
        )


class WordStatsView(BaseModel):
    """JSON form of a generated word and its statistics."""

    model_config = ConfigDict(frozen=True)

    word: str
    length: Optional[int] = None
    r: Optional[int] = None
    r_dollar: Optional[int] = None


class EditView(BaseModel):
    """JSON form of an edit: the edited word and both measures before and after."""

    model_config = ConfigDict(frozen=True)

    word: str
    r_before: Optional[int] = None
    r_after: Optional[int] = None
    r_dollar_before: Optional[int] = None
    r_dollar_after: Optional[int] = None


def rle_field(transform: Transform) -> bytes:
    return b",".join(run.symbol + b":" + str(run.length).encode() for run in transform.rle)


def transform_text(transform: Transform) -> bytes:
    """``bwt=... runs=N rle=s:n,...``"""
    return line(
        b"bwt=" + transform.bwt,
        b"runs=" + str(transform.run_count).encode(),
        b"rle=" + rle_field(transform),
    )


def transform_tsv(transform: Transform) -> bytes:
    return line(b"bwt", b"runs", b"rle", separator=TSV_SEPARATOR) + line(
        transform.bwt,
        str(transform.run_count).encode(),
        rle_field(transform),
        separator=TSV_SEPARATOR,
    )


def json_bytes(model: BaseModel) -> bytes:
    return model.model_dump_json(by_alias=True).encode() + b"\n"


def stats_text(view: WordStatsView, word: bytes) -> bytes:
    """The word on its own line, then ``length=.. r=.. r_dollar=..`` when measured."""
    out = line(word)
    if view.length is not None:
        out += line(
            b"length=" + str(view.length).encode(),
            b"r=" + optional_int(view.r),
            b"r_dollar=" + optional_int(view.r_dollar),
        )
    return out


def edit_text(view: EditView, word: bytes) -> bytes:
    return (
        line(word)
        + line(b"r:", optional_int(view.r_before), b"->", optional_int(view.r_after))
        + line(
            b"r_dollar:",
            optional_int(view.r_dollar_before),
            b"->",
            optional_int(view.r_dollar_after),
        )
    )


def _ratio(value: Optional[Ratio]) -> bytes:
    return b"-" if value is None else f"{value.numerator}/{value.denominator}".encode()


def scan_text(report: SensitivityReport) -> bytes:
    """Summary lines of a scan: edit counts and the extremes of each measure."""
    out = line(
        b"length=" + str(report.word_length).encode(),
        b"edits=" + str(len(report.records)).encode(),
        b"effective=" + str(report.effective_count).encode(),
    )
    measures = [(b"r", report.r)]
    if report.r_dollar is not None:
        measures.append((b"r_dollar", report.r_dollar))
    for name, extremes in measures:
        out += line(
            name + b":",
            b"base=" + str(extremes.base).encode(),
            b"max_additive=" + optional_int(extremes.max_additive),
            b"max_multiplicative=" + _ratio(extremes.max_multiplicative),
        )
    return out


def scan_tsv(report: SensitivityReport) -> bytes:
    out = line(b"kind", b"pos", b"sym", b"noop", b"new_r", b"new_r_dollar",
               separator=TSV_SEPARATOR)
    for record in report.records:
        op = record.op
        out += line(
            op.kind.value.encode(),
            str(op.pos).encode(),
            b"" if op.sym is None else bytes([op.sym]),
            str(record.noop).lower().encode(),
            optional_int(record.new_r),
            optional_int(record.new_r_dollar),
            separator=TSV_SEPARATOR,
        )
    return out


def _expected(report: VerifyReport) -> str:
    if isinstance(report.expected, Interval):
        upper = "inf" if report.expected.hi is None else str(report.expected.hi)
        return f"[{report.expected.lo},{upper}]"
    return str(report.expected)


def _params(report: VerifyReport) -> str:
    return " ".join(f"{name}={value}" for name, value in report.params.items())


def verify_text(summary: VerifySummary) -> bytes:
    """``PASS``/``FAIL`` line per report, then a totals line."""
    lines: List[str] = []
    for report in summary.reports:
        status = "PASS" if report.passed else "FAIL"
        lines.append(
            f"{status} {report.check_id.value} {_params(report)} "
            f"expected={_expected(report)} observed={report.observed}"
        )
    lines.append(
        f"total={summary.total} passed={summary.passed} failed={summary.failed} "
        f"skipped={len(summary.skipped)}"
    )
    return ("\n".join(lines) + "\n").encode("utf-8")


def verify_tsv(reports: Sequence[VerifyReport]) -> bytes:
    rows = ["\t".join(("check_id", "params", "expected", "observed", "pass", "detail"))]
    for report in reports:
        rows.append("\t".join((
            report.check_id.value,
            _params(report),
            _expected(report),
            str(report.observed),
            str(report.passed).lower(),
            report.detail,
        )))
    return ("\n".join(rows) + "\n").encode("utf-8")
