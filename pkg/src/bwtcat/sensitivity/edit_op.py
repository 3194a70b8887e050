"""Single-character edit model."""

from fractions import Fraction
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from bwtcat.enums.edit_kind import EditKind


class EditOp(BaseModel):
    """One insertion, deletion or substitution.

    Attributes:
        kind: The edit operation
        pos: Gap index for insertions, symbol index otherwise
        sym: Byte value to insert or substitute; None for deletions
    """

    model_config = ConfigDict(frozen=True)

    kind: EditKind
    pos: int = Field(ge=0, description="Position of the edit")
    sym: Optional[int] = Field(default=None, ge=0, le=255, description="Symbol byte")

    @model_validator(mode="after")
    def check_symbol_presence(self) -> "EditOp":
        """Deletions carry no symbol; the other kinds need one."""
        if self.kind is EditKind.DELETE and self.sym is not None:
            raise ValueError("delete takes no symbol")
        if self.kind is not EditKind.DELETE and self.sym is None:
            raise ValueError(f"{self.kind.value} needs a symbol")
        return self

    @computed_field
    @property
    def char(self) -> Optional[str]:
        """The symbol as a one-character latin-1 string."""
        return None if self.sym is None else bytes([self.sym]).decode("latin-1")

    @property
    def sort_key(self) -> Tuple[int, int, int]:
        """Records sort by kind, then position, then symbol."""
        return (self.kind.ordinal, self.pos, -1 if self.sym is None else self.sym)

    @classmethod
    def insert(cls, pos: int, sym: bytes | int) -> "EditOp":
        return cls(kind=EditKind.INSERT, pos=pos, sym=_byte(sym))

    @classmethod
    def delete(cls, pos: int) -> "EditOp":
        return cls(kind=EditKind.DELETE, pos=pos)

    @classmethod
    def substitute(cls, pos: int, sym: bytes | int) -> "EditOp":
        return cls(kind=EditKind.SUBSTITUTE, pos=pos, sym=_byte(sym))


def _byte(sym: bytes | int) -> int:
    if isinstance(sym, int):
        return sym
    if len(sym) != 1:
        raise ValueError(f"Provided value is not a valid symbol: {sym!r}")
    return sym[0]


class Ratio(BaseModel):
    """Exact non-negative rational number.

    Attributes:
        numerator: Numerator in lowest terms
        denominator: Positive denominator in lowest terms
    """

    model_config = ConfigDict(frozen=True)

    numerator: int = Field(ge=0)
    denominator: int = Field(ge=1)

    @classmethod
    def of(cls, numerator: int, denominator: int) -> "Ratio":
        return cls.from_fraction(Fraction(numerator, denominator))

    @classmethod
    def from_fraction(cls, value: Fraction) -> "Ratio":
        return cls(numerator=value.numerator, denominator=value.denominator)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)
