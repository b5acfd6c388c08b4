"""Sylvester resultants computed by fraction-free elimination."""
from __future__ import annotations

from ..errors import DegreeZeroInVar
from .linalg import det_bareiss
from .poly import MultiPoly


def sylvester_matrix(f: MultiPoly, g: MultiPoly, var):
    """(m+n) x (m+n) Sylvester matrix of f, g in ``var``; entries are MultiPolys."""
    fc = f.coeffs_in(var)[::-1]  # leading first
    gc = g.coeffs_in(var)[::-1]
    m, n = len(fc) - 1, len(gc) - 1
    if m < 1 or n < 1:
        raise DegreeZeroInVar(f"both polynomials need positive degree in {var}")
    size = m + n
    zero = f.ring.zero()
    rows = []
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return rows


def resultant_wrt(f: MultiPoly, g: MultiPoly, var) -> MultiPoly:
    """Res_var(f, g), a polynomial in the remaining variables (same ring)."""
    if f.ring != g.ring:
        raise ValueError("resultant operands must share a ring")
    return det_bareiss(sylvester_matrix(f, g, var))
