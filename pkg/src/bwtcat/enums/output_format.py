"""Output format enumeration for the command line."""

from enum import Enum


class OutputFormat(str, Enum):
    """Formats the command line can write to stdout."""

    TEXT = "text"
    JSON = "json"
    TSV = "tsv"
