"""Single-character edits and their effect on r and r_$."""

from bwtcat.sensitivity.edit_op import EditOp, Ratio
from bwtcat.sensitivity.effects import (
    EditEffect,
    RComparison,
    apply_edit,
    compare_r_rdollar,
    edit_effect,
    is_noop,
)
from bwtcat.sensitivity.scan import (
    EditRecord,
    SensitivityExtremes,
    SensitivityReport,
    alphabet_for,
    enumerate_edits,
    scan_edits,
)

__all__ = [
    'EditEffect',
    'EditOp',
    'EditRecord',
    'RComparison',
    'Ratio',
    'SensitivityExtremes',
    'SensitivityReport',
    'alphabet_for',
    'apply_edit',
    'compare_r_rdollar',
    'edit_effect',
    'enumerate_edits',
    'is_noop',
    'scan_edits',
]
