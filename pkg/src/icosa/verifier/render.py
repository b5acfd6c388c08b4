"""Conversion of exact values to JSON-friendly data."""
from __future__ import annotations

from fractions import Fraction

from ..numfield import ExtElem
from ..polyalg.poly import MultiPoly
from ..projective import ProjPoint


def plain(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, ExtElem):
        return str(value.to_rational()) if value.is_rational() else str(value)
    if isinstance(value, (MultiPoly, ProjPoint)):
        return str(value)
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted((plain(v) for v in value), key=str)
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    return str(value)
