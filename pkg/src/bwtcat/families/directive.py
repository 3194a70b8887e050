"""Parameter models for the word generators."""

from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from bwtcat.validators.directive_validator import DirectiveValidator


class DirectiveSequence(BaseModel):
    """Exponents driving the standard-word recurrence.

    ``d[i - 1]`` is the exponent used to build ``s_{i+1}`` from ``s_i`` and ``s_{i-1}``.

    Attributes:
        d: Directive entries, each at least 1
    """

    model_config = ConfigDict(frozen=True)

    d: Tuple[int, ...] = Field(default=(), description="Directive entries d_0, d_1, ...")

    @field_validator('d', mode='before')
    @classmethod
    def parse_text(cls, value):
        """Accept a comma separated string such as ``"2,1,1"``."""
        if isinstance(value, str):
            return tuple(int(part) for part in value.split(",") if part.strip())
        return value

    @field_validator('d')
    @classmethod
    def check_positive(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        """Reject zero and negative exponents."""
        if not DirectiveValidator().validate(value):
            raise ValueError(f"Provided value is not a valid directive sequence: {value}")
        return value

    @classmethod
    def fibonacci(cls, length: int) -> "DirectiveSequence":
        """All-ones directive sequence of the given length."""
        return cls(d=(1,) * length)


class FamilyParams(BaseModel):
    """Parameters handed to a word generator.

    Bounds depend on the family and are checked by the generator.

    Attributes:
        k: Order or main parameter
        i: Secondary index, used by the polynomial-run family
        directive: Directive sequence, used by standard words
    """

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=0, description="Order or family parameter")
    i: Optional[int] = Field(default=None, ge=1, description="Secondary index")
    directive: Optional[DirectiveSequence] = Field(default=None)
