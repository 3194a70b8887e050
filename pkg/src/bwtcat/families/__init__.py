"""Word families with known BWT run counts."""

from bwtcat.families.directive import DirectiveSequence, FamilyParams
from bwtcat.families.family_factory import FamilyFactory, generate
from bwtcat.families.generators import WordGenerator
from bwtcat.families.standard import (
    central_word,
    fibonacci,
    fibonacci_factorization,
    fibonacci_number,
    lyndon_rotation,
    reverse_fibonacci,
    standard_central_word,
    standard_word,
)
from bwtcat.families.t_family import t_family_length, t_family_word
from bwtcat.families.wk import (
    e_block,
    is_prefix_free,
    q_block,
    s_block,
    wk_blocks,
    wk_length,
    wk_prefixes,
    wk_variant_word,
    wk_word,
)

__all__ = [
    'DirectiveSequence',
    'FamilyFactory',
    'FamilyParams',
    'central_word',
    'e_block',
    'fibonacci',
    'fibonacci_factorization',
    'fibonacci_number',
    'WordGenerator',
    'generate',
    'is_prefix_free',
    'lyndon_rotation',
    'q_block',
    'reverse_fibonacci',
    's_block',
    'standard_central_word',
    'standard_word',
    't_family_length',
    't_family_word',
    'wk_blocks',
    'wk_length',
    'wk_prefixes',
    'wk_variant_word',
    'wk_word',
]
