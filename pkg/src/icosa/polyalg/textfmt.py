"""Plain-text polynomial format.

Grammar (whitespace insignificant)::

    poly        ::= term (("+" | "-") term)*
    term        ::= [sign] coefficient ("*" var ["^" exp])*
    coefficient ::= integer | integer "/" positive-integer
    var         ::= [a-z][a-z0-9]*

The renderer always writes an explicit coefficient and emits terms in
graded-lex descending order, so ``parse(render(f)) == f``.  The parser also
accepts a bare monomial such as ``x1^2`` (coefficient 1).
"""
from __future__ import annotations

import re
from fractions import Fraction

from ..errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-z][a-z0-9]*)|(\S))")


def _tokens(text):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected input at offset {pos}: {text[pos:pos + 10]!r}")
        num, name, sym = m.groups()
        if num is not None:
            out.append(("int", int(num)))
        elif name is not None:
            out.append(("var", name))
        else:
            out.append(("sym", sym))
        pos = m.end()
    return out


def parse_poly(text, ring=None):
    """Parse ``text`` into a MultiPoly over ``ring``.

    Without a ring, the variables found are ordered by (letters, numeric
    suffix), e.g. ``x1 < x2 < x10``.
    """
    from .poly import MultiPoly, PolyRing

    toks = _tokens(text)
    if not toks:
        raise ParseError("empty polynomial text")
    if ring is None:
        names = sorted({v for kind, v in toks if kind == "var"}, key=_var_sort_key)
        ring = PolyRing(names or ["x"])
    elif not isinstance(ring, PolyRing):
        ring = PolyRing(ring)

    i = 0
    terms = {}

    def peek():
        return toks[i] if i < len(toks) else (None, None)

    first = True
    while i < len(toks):
        sign = 1
        kind, val = peek()
        if kind == "sym" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            raise ParseError(f"expected '+' or '-' before term, got {val!r}")
        first = False

        coeff = Fraction(1)
        exps = [0] * ring.nvars
        kind, val = peek()
        expect_factor = True
        if kind == "int":
            i += 1
            num = val
            kind2, val2 = peek()
            if kind2 == "sym" and val2 == "/":
                i += 1
                kind3, den = peek()
                if kind3 != "int" or den == 0:
                    raise ParseError("denominator must be a positive integer")
                i += 1
                coeff = Fraction(num, den)
            else:
                coeff = Fraction(num)
            expect_factor = False
        while True:
            kind, val = peek()
            if not expect_factor:
                if kind == "sym" and val == "*":
                    i += 1
                    kind, val = peek()
                else:
                    break
            if kind != "var":
                raise ParseError(f"expected variable, got {val!r}")
            i += 1
            try:
                idx = ring.index(val)
            except Exception as exc:
                raise ParseError(f"unknown variable {val!r} for {ring}") from exc
            k = 1
            kind2, val2 = peek()
            if kind2 == "sym" and val2 == "^":
                i += 1
                kind3, e = peek()
                if kind3 != "int":
                    raise ParseError("exponent must be a non-negative integer")
                i += 1
                k = e
            exps[idx] += k
            expect_factor = False
        key = tuple(exps)
        v = terms.get(key, Fraction(0)) + sign * coeff
        if v:
            terms[key] = v
        else:
            terms.pop(key, None)
    return MultiPoly(ring, terms)


def _var_sort_key(name):
    m = re.match(r"([a-z]+)(\d*)", name)
    head, digits = m.groups()
    return (head, int(digits) if digits else -1, name)


def _fmt_coeff(c):
    if isinstance(c, Fraction):
        return str(c)
    if isinstance(c, int):
        return str(c)
    if hasattr(c, "is_rational") and c.is_rational():
        return str(c.to_rational())
    return f"({c})"


def render_poly(f):
    """Canonical text: graded-lex descending, explicit ``*`` and ``^``."""
    if f.is_zero():
        return "0"
    out = []
    for e, c in f.terms():
        s = _fmt_coeff(c)
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        factors = [s]
        for name, k in zip(f.ring.names, e):
            if k == 1:
                factors.append(name)
            elif k:
                factors.append(f"{name}^{k}")
        body = "*".join(factors)
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)
