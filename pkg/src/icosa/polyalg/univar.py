"""Dense univariate polynomials over an exact field.

Polynomials are lists of coefficients, lowest degree first, with no trailing
zeros (the zero polynomial is ``[]``).  Coefficients may be ``Fraction``,
``ExtElem`` or anything else with field operations.
"""
from __future__ import annotations

from fractions import Fraction

from .poly import MultiPoly


def strip(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def degree(p):
    return len(p) - 1


def _recip(c):
    # integer inputs would otherwise decay to floats
    return Fraction(1, c) if isinstance(c, int) else 1 / c


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return strip(out)


def sub(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = out[i] - c
    return strip(out)


def scale(a, c):
    return strip([x * c for x in a])


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
    return strip(out)


def divmod_(a, b):
    a = strip(a)
    b = strip(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], a
    inv_lc = _recip(b[-1])
    q = [0] * (len(a) - len(b) + 1)
    a = list(a)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * inv_lc
        q[k] = c
        if c:
            for i, bi in enumerate(b):
                a[i + k] = a[i + k] - c * bi
    return strip(q), strip(a[: len(b) - 1])


def rem(a, b):
    return divmod_(a, b)[1]


def monic(a):
    a = strip(a)
    if not a:
        return a
    inv = _recip(a[-1])
    return [c * inv for c in a[:-1]] + [a[-1] * inv]


def gcd(a, b):
    """Monic gcd; ``gcd(0, 0) = 0``."""
    a, b = strip(a), strip(b)
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def xgcd(a, b):
    """Return (g, s, t) with g = s*a + t*b monic."""
    r0, r1 = strip(a), strip(b)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return [], [], []
    inv = _recip(r0[-1])
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def deriv(a):
    return strip([a[k] * k for k in range(1, len(a))])


def exquo(a, b):
    q, r = divmod_(a, b)
    if r:
        raise ArithmeticError("inexact univariate division")
    return q


def squarefree_part(a):
    """Monic ``a / gcd(a, a')``."""
    a = strip(a)
    if len(a) <= 1:
        return monic(a)
    g = gcd(a, deriv(a))
    return monic(exquo(a, g))


def squarefree_decomposition(a):
    """Yun's algorithm: list of (factor, multiplicity) with monic square-free factors."""
    a = monic(strip(a))
    if len(a) <= 1:
        return []
    out = []
    b = deriv(a)
    c = gcd(a, b)
    w = exquo(a, c)
    y = exquo(b, c)
    k = 1
    while len(w) > 1:
        z = sub(y, deriv(w))
        g = gcd(w, z)
        if len(g) > 1:
            out.append((g, k))
        w = exquo(w, g)
        y = exquo(z, g)
        k += 1
    return out


def evaluate(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def root_multiplicity(a, r):
    """Multiplicity of ``r`` as a root of ``a`` (0 if not a root)."""
    a = strip(a)
    if not a:
        raise ValueError("every value is a root of the zero polynomial")
    m = 0
    while a and not evaluate(a, r):
        a = deriv(a)
        m += 1
    return m


def compose_linear(a, shift):
    """Coefficients of ``a(x + shift)``."""
    out = []
    for c in reversed(a):
        out = add(mul(out, [shift, 1]), [c])
    return out


def rational_roots(a):
    """Distinct rational roots of a polynomial with rational coefficients."""
    from math import gcd as igcd

    a = strip(a)
    if len(a) <= 1:
        return []
    roots = []
    while a and a[0] == 0:
        a = a[1:]
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
    if len(a) <= 1:
        return roots
    den = 1
    for c in a:
        c = Fraction(c)
        den = den * c.denominator // igcd(den, c.denominator)
    ints = [int(Fraction(c) * den) for c in a]
    lead, const = abs(ints[-1]), abs(ints[0])
    for p in _divisors(const):
        for q in _divisors(lead):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand not in roots and evaluate(a, cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def _divisors(n):
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


# -- MultiPoly front ends -----------------------------------------------------

def _single_var(f, g=None):
    used = set(f.variables())
    if g is not None:
        used |= set(g.variables())
    if len(used) > 1:
        raise ValueError(f"expected univariate input, found variables {sorted(used)}")
    return used.pop() if used else f.ring.names[0]


def gcd_uni(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Monic gcd of two univariate MultiPolys."""
    var = _single_var(f, g)
    return MultiPoly.from_dense(gcd(f.to_dense(var), g.to_dense(var)), f.ring, var)


def squarefree_part_poly(f: MultiPoly) -> MultiPoly:
    var = _single_var(f)
    return MultiPoly.from_dense(squarefree_part(f.to_dense(var)), f.ring, var)
