"""Word generator base model.

Generators are small pydantic models registered with the FamilyFactory; each maps a
FamilyParams instance to a word.
"""

from typing import ClassVar, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from bwtcat.enums.family_name import FamilyName
from bwtcat.errors import ParameterError
from bwtcat.families.directive import DirectiveSequence, FamilyParams


class WordGenerator(BaseModel):
    """Abstract base generator for one word family.

    Attributes:
        family: The family this generator produces
        param_names: Names of the positional integer parameters, in order
    """

    model_config = ConfigDict(frozen=True)

    family: FamilyName
    param_names: ClassVar[Tuple[str, ...]] = ("k",)

    def params_from_args(
        self, values: Sequence[int], directive: DirectiveSequence | None = None
    ) -> FamilyParams:
        """Bind positional integers to FamilyParams fields.

        Args:
            values: Positional parameters as given on the command line
            directive: Optional directive sequence

        Returns:
            The bound parameters.

        Raises:
            ParameterError: If the number of values does not match ``param_names``.
        """
        if len(values) != len(self.param_names):
            names = " ".join(name.upper() for name in self.param_names)
            raise ParameterError(f"{self.family.value} expects parameters: {names}")
        bound = dict(zip(self.param_names, values))
        return FamilyParams(directive=directive, **bound)

    def generate(self, params: FamilyParams) -> bytes:
        """Produce the word for ``params``."""
        raise NotImplementedError
