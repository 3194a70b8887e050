"""Word generator models."""

from bwtcat.families.generators.base import WordGenerator
from bwtcat.families.generators.implementations import *  # noqa: F403

__all__ = ['WordGenerator']
