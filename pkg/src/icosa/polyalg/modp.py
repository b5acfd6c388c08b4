"""Univariate polynomials over GF(p) and the distinct-degree irreducibility test."""
from __future__ import annotations

from fractions import Fraction

from ..errors import BadLeadingCoefficient, CompositeModulus
from ..numfield import ExtElem, PrimeFieldElem, is_prime
from .poly import MultiPoly


def reduce_coeffs(coeffs, p):
    """Map rational (or GF(p)) coefficients to residues mod p."""
    out = []
    for c in coeffs:
        if isinstance(c, PrimeFieldElem):
            out.append(c.value % p)
            continue
        if isinstance(c, ExtElem):
            c = c.to_rational()
        c = Fraction(c)
        if c.denominator % p == 0:
            raise BadLeadingCoefficient(f"denominator {c.denominator} divisible by {p}")
        out.append(c.numerator * pow(c.denominator, -1, p) % p)
    return out


def _strip(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _rem(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv % p
        if c:
            off = k - db
            for i, bi in enumerate(b):
                a[off + i] = (a[off + i] - c * bi) % p
    return _strip(a[:db])


def _mulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _rem([c % p for c in out], f, p)


def _powmod(base, e, f, p):
    result = [1]
    while e:
        if e & 1:
            result = _mulmod(result, base, f, p)
        e >>= 1
        if e:
            base = _mulmod(base, base, f, p)
    return result


def _gcd(a, b, p):
    a, b = _strip(list(a)), _strip(list(b))
    while b:
        a, b = b, _rem(a, b, p)
    return a


def irreducible_mod_p(f, p):
    """True iff ``f`` is irreducible over GF(p).

    ``f`` is a low-to-high coefficient list (rationals, ints or
    PrimeFieldElem) or a univariate MultiPoly.  Uses the distinct-degree
    sieve: ``f`` of degree n is irreducible iff
    ``gcd(x^(p^k) - x, f) = 1`` for every ``k <= n // 2``.
    """
    if not is_prime(p):
        raise CompositeModulus(f"{p} is not prime")
    if isinstance(f, MultiPoly):
        f = f.to_dense()
    coeffs = list(f)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if len(coeffs) < 2:
        raise ValueError("irreducibility test needs a nonconstant polynomial")
    a = reduce_coeffs(coeffs, p)
    if a[-1] == 0:
        raise BadLeadingCoefficient(f"{p} divides the leading coefficient")
    n = len(a) - 1
    if n == 1:
        return True
    inv = pow(a[-1], -1, p)
    a = [c * inv % p for c in a]
    x = [0, 1]
    h = x
    for _ in range(n // 2):
        h = _powmod(h, p, a, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _gcd(a, _strip(diff), p)
        if len(g) > 1:
            return False
    return True
