"""Family factory for creating word generators.

This module manages the registration and lookup of word generators by FamilyName.
"""

from typing import TYPE_CHECKING, ClassVar, Dict, Type

from bwtcat.enums.family_name import FamilyName

if TYPE_CHECKING:
    from bwtcat.families.directive import FamilyParams
    from bwtcat.families.generators.base import WordGenerator


class FamilyFactory:
    """Factory for word generators.

    Generators register themselves with ``@FamilyFactory.register(name)``; lookups use
    the FamilyName enum so the command line and the library share one set of names.
    """

    _generators: ClassVar[Dict[FamilyName, Type["WordGenerator"]]] = {}

    @classmethod
    def register(cls, name: FamilyName):
        """Register a generator implementation.

        Args:
            name: The family the generator produces

        Returns:
            Decorator function for the generator class
        """
        def decorator(generator_class: Type["WordGenerator"]):
            cls._generators[name] = generator_class
            return generator_class
        return decorator

    @classmethod
    def create(cls, name: FamilyName, **kwargs) -> "WordGenerator":
        """Create a generator by family name.

        Args:
            name: The family to create a generator for
            **kwargs: Additional arguments for generator creation

        Returns:
            New generator instance

        Raises:
            ValueError: If no implementation exists for the family
        """
        if name not in cls._generators:
            raise ValueError(f"No implementation for family: {name}")
        return cls._generators[name](**kwargs)


def generate(name: FamilyName, params: "FamilyParams") -> bytes:
    """Generate the word of family ``name`` for ``params``."""
    return FamilyFactory.create(name).generate(params)
