"""Exact linear algebra: fraction-free (Bareiss) rank and determinant, kernels.

Entries may be field elements or MultiPolys.  Bareiss steps divide exactly;
for polynomial entries that division goes through ``MultiPoly.exquo``.
"""
from __future__ import annotations

from fractions import Fraction

from .poly import MultiPoly


def _exact_div(a, b):
    if isinstance(a, MultiPoly):
        return a.exquo(b)
    return a / b


def _coerce_rows(rows):
    return [[Fraction(x) if isinstance(x, int) else x for x in r] for r in rows]


def _zero_like(x):
    if isinstance(x, MultiPoly):
        return x.ring.zero()
    return Fraction(0)


class ExactMatrix:
    """Rectangular matrix of exact entries."""

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        self.entries = rows

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def rank(self):
        return matrix_rank(self.entries)

    def kernel(self):
        return kernel_basis(self.entries)

    def det(self):
        return det_bareiss(self.entries)

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols})"


def bareiss_eliminate(rows):
    """Fraction-free elimination with row and column pivoting.

    Returns (rank, sign, last_pivot) where ``sign * last_pivot`` is the
    determinant when the matrix is square and of full rank.
    """
    m = _coerce_rows(rows)
    nr, nc = len(m), len(m[0]) if m else 0
    prev = 1
    sign = 1
    r = 0
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
            sign = -sign
        p = m[r][c]
        for i in range(r + 1, nr):
            mic = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, nc):
                v = row_i[j] * p - mic * row_r[j]
                if prev != 1:
                    v = _exact_div(v, prev)
                row_i[j] = v
            row_i[c] = _zero_like(p)
        prev = p
        r += 1
    return r, sign, prev


def matrix_rank(rows):
    if not rows:
        return 0
    return bareiss_eliminate(rows)[0]


def det_bareiss(rows):
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    rank, sign, last = bareiss_eliminate(rows)
    if rank < n:
        return _zero_like(rows[0][0])
    return last * sign if sign == 1 else -last


def rref(rows):
    """Reduced row echelon form over a field; returns (matrix, pivot_columns)."""
    m = _coerce_rows(rows)
    nr, nc = len(m), len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def kernel_basis(rows, ncols=None):
    """Basis of {v : M v = 0} over the entry field."""
    if not rows:
        return [[Fraction(1) if i == j else Fraction(0) for i in range(ncols)] for j in range(ncols)]
    m, pivots = rref(rows)
    nc = len(rows[0])
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * nc
        v[fcol] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fcol]
        basis.append(v)
    return basis


def mat_vec(rows, v):
    return [sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in rows]


def mat_mul(a, b):
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(r, col)), Fraction(0)) for col in bt] for r in a]


def solve_unique(rows, rhs):
    """Solve a square nonsingular system exactly."""
    n = len(rows)
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("system is singular")
    return [m[i][n] for i in range(n)]


def inverse(rows):
    n = len(rows)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in m]
