"""Enumeration types."""

from bwtcat.enums.alphabet_policy import AlphabetPolicy
from bwtcat.enums.ca_builder import CABuilder
from bwtcat.enums.check_id import CheckId
from bwtcat.enums.edit_kind import EditKind
from bwtcat.enums.family_name import FamilyName
from bwtcat.enums.output_format import OutputFormat
from bwtcat.enums.wk_variant import WkVariant

__all__ = [
    'AlphabetPolicy',
    'CABuilder',
    'CheckId',
    'EditKind',
    'FamilyName',
    'OutputFormat',
    'WkVariant',
]
