"""Executable checks of closed-form BWTs and run counts.

Importing this package registers every check with CheckRegistry.
"""

from bwtcat.verify.closed_forms import wk_block_table, wk_bwt, wk_runs
from bwtcat.verify.dollar_checks import verify_dollar
from bwtcat.verify.fibonacci_checks import verify_fibonacci_catastrophes
from bwtcat.verify.registry import CheckParams, CheckRegistry, RegisteredCheck
from bwtcat.verify.report import (
    Interval,
    SkippedCheck,
    VerifyReport,
    VerifySummary,
    render_word,
)
from bwtcat.verify.runner import run_check, verify_all
from bwtcat.verify.t_family_checks import verify_t_family
from bwtcat.verify.table import BlockTable, TableRow, expected_table2, table2
from bwtcat.verify.wk_checks import verify_wk, verify_wk_edits

__all__ = [
    'BlockTable',
    'CheckParams',
    'CheckRegistry',
    'Interval',
    'RegisteredCheck',
    'SkippedCheck',
    'TableRow',
    'VerifyReport',
    'VerifySummary',
    'expected_table2',
    'render_word',
    'run_check',
    'table2',
    'verify_all',
    'verify_dollar',
    'verify_fibonacci_catastrophes',
    'verify_t_family',
    'verify_wk',
    'verify_wk_edits',
    'wk_block_table',
    'wk_bwt',
    'wk_runs',
]
