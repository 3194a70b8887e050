"""Generator implementations.

Each family is registered with the FamilyFactory under its FamilyName.
"""

from typing import ClassVar, Tuple

from bwtcat.enums.family_name import FamilyName
from bwtcat.errors import ParameterError
from bwtcat.families.directive import FamilyParams
from bwtcat.families.family_factory import FamilyFactory
from bwtcat.families.generators.base import WordGenerator
from bwtcat.families.standard import (
    central_word,
    fibonacci,
    lyndon_rotation,
    reverse_fibonacci,
    standard_word,
)
from bwtcat.families.t_family import t_family_word
from bwtcat.families.wk import wk_word


@FamilyFactory.register(FamilyName.FIBONACCI)
class FibonacciGenerator(WordGenerator):
    """Fibonacci word of order k."""

    def __init__(self, **data):
        super().__init__(family=FamilyName.FIBONACCI, **data)

    def generate(self, params: FamilyParams) -> bytes:
        return fibonacci(params.k)


@FamilyFactory.register(FamilyName.STANDARD)
class StandardGenerator(WordGenerator):
    """Standard word of order k for a directive sequence."""

    def __init__(self, **data):
        super().__init__(family=FamilyName.STANDARD, **data)

    def generate(self, params: FamilyParams) -> bytes:
        if params.directive is None:
            raise ParameterError("standard words need a directive sequence")
        return standard_word(params.directive, params.k)


@FamilyFactory.register(FamilyName.CENTRAL)
class CentralGenerator(WordGenerator):
    """Central word of order k."""

    def __init__(self, **data):
        super().__init__(family=FamilyName.CENTRAL, **data)

    def generate(self, params: FamilyParams) -> bytes:
        return central_word(params.k)


@FamilyFactory.register(FamilyName.WK)
class WkGenerator(WordGenerator):
    """Block word w_k, k > 5."""

    def __init__(self, **data):
        super().__init__(family=FamilyName.WK, **data)

    def generate(self, params: FamilyParams) -> bytes:
        return wk_word(params.k)


@FamilyFactory.register(FamilyName.TFAM)
class TFamilyGenerator(WordGenerator):
    """Product of a b^(j^k) for j = 1..i."""

    param_names: ClassVar[Tuple[str, ...]] = ("i", "k")

    def __init__(self, **data):
        super().__init__(family=FamilyName.TFAM, **data)

    def generate(self, params: FamilyParams) -> bytes:
        if params.i is None:
            raise ParameterError("t-family words need the index i")
        return t_family_word(params.i, params.k)


@FamilyFactory.register(FamilyName.REVFIB)
class ReverseFibonacciGenerator(WordGenerator):
    """Reversed Fibonacci word of order k."""

    def __init__(self, **data):
        super().__init__(family=FamilyName.REVFIB, **data)

    def generate(self, params: FamilyParams) -> bytes:
        return reverse_fibonacci(params.k)


@FamilyFactory.register(FamilyName.LYNDONROT)
class LyndonRotationGenerator(WordGenerator):
    """Lyndon rotation of the Fibonacci word of order k."""

    def __init__(self, **data):
        super().__init__(family=FamilyName.LYNDONROT, **data)

    def generate(self, params: FamilyParams) -> bytes:
        return lyndon_rotation(fibonacci(params.k))
