"""Counts of norm-one elements of bounded height in CM fields."""

import json

from ._normone import (
    ConfigError,
    Field,
    PrecisionError,
    builtin_fields,
    count_s2,
    count_sk,
    discrepancy,
    enumerate_sk,
    histogram_csv,
    load_field,
)
from . import _normone

__all__ = [
    "ConfigError",
    "Field",
    "PrecisionError",
    "builtin_fields",
    "constants",
    "count_report",
    "count_s2",
    "count_sk",
    "discrepancy",
    "enumerate_sk",
    "histogram_csv",
    "load_field",
]


def constants(field):
    """A_K and its factors as a dict."""
    return json.loads(_normone.constants(field))


def count_report(field, H, arc="", oracle=False, threads=0):
    """Sieved count with main term, residual and ledger summary as a dict."""
    return json.loads(_normone.count_report(field, H, arc, oracle, threads))
