"""Conjugate arrays, both BWT variants, runs, inversion and blocks."""

from bwtcat.core.blocks import BlockIndex, BlockQuery, bwt_block, bwt_block_dollar
from bwtcat.core.conjugate_array import (
    ConjugateArray,
    conjugate_array,
    doubling_conjugate_array,
    naive_conjugate_array,
)
from bwtcat.core.inversion import inverse_bwt, inverse_bwt_dollar
from bwtcat.core.transform import (
    RunLength,
    Transform,
    bwt,
    bwt_dollar,
    r,
    r_dollar,
    rle,
    runs,
)
from bwtcat.core.words import (
    conj,
    is_lyndon,
    is_palindrome,
    is_primitive,
    lcp,
    least_rotation,
    primitive_root,
    reverse,
    truncate,
)

__all__ = [
    'BlockIndex',
    'BlockQuery',
    'ConjugateArray',
    'RunLength',
    'Transform',
    'bwt',
    'bwt_block',
    'bwt_block_dollar',
    'bwt_dollar',
    'conj',
    'conjugate_array',
    'doubling_conjugate_array',
    'inverse_bwt',
    'inverse_bwt_dollar',
    'is_lyndon',
    'is_palindrome',
    'is_primitive',
    'lcp',
    'least_rotation',
    'naive_conjugate_array',
    'primitive_root',
    'r',
    'r_dollar',
    'reverse',
    'rle',
    'runs',
    'truncate',
]
