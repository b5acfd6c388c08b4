"""Sparse multivariate polynomials in graded-lex canonical form.

A :class:`MultiPoly` is a mapping from exponent tuples to nonzero
coefficients.  Coefficients are any exact scalars supporting ``+ - * /``
(``Fraction``, ``int`` or :class:`~icosa.numfield.ExtElem`); mixing rational
and extension coefficients promotes to the extension automatically.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement

from ..errors import ArityMismatch, NotExactDivision, UnknownVariable


class PolyRing:
    """Ordered tuple of variable names.  The first variable is the largest."""

    __slots__ = ("names", "_index")

    def __init__(self, names):
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        self._index = {n: i for i, n in enumerate(self.names)}

    @property
    def nvars(self):
        return len(self.names)

    def index(self, var):
        if isinstance(var, int):
            if not 0 <= var < len(self.names):
                raise UnknownVariable(f"variable index {var} out of range")
            return var
        if isinstance(var, MultiPoly):
            var = var.as_variable()
        try:
            return self._index[var]
        except KeyError:
            raise UnknownVariable(f"{var!r} is not a variable of {self}") from None

    @property
    def gens(self):
        n = len(self.names)
        return tuple(
            MultiPoly(self, {tuple(1 if j == i else 0 for j in range(n)): Fraction(1)})
            for i in range(n)
        )

    def gen(self, name):
        return self.gens[self.index(name)]

    def zero(self):
        return MultiPoly(self, {})

    def const(self, c):
        if not c:
            return MultiPoly(self, {})
        return MultiPoly(self, {(0,) * len(self.names): _scalar(c)})

    def monomials(self, degree):
        """All exponent tuples of the given total degree, graded-lex descending."""
        n = len(self.names)
        out = []
        for combo in combinations_with_replacement(range(n), degree):
            e = [0] * n
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
        out.sort(reverse=True)
        return out

    def parse(self, text):
        from .textfmt import parse_poly

        return parse_poly(text, self)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"PolyRing({' '.join(self.names)})"

    __str__ = __repr__


def _scalar(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


def grlex_key(exps):
    return (sum(exps), exps)


class MultiPoly:
    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring, terms=None):
        if not isinstance(ring, PolyRing):
            ring = PolyRing(ring)
        self.ring = ring
        if terms:
            self._terms = {e: _scalar(c) for e, c in terms.items() if c}
        else:
            self._terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        obj = object.__new__(cls)
        obj.ring = ring
        obj._terms = terms
        obj._hash = None
        return obj

    # -- inspection ---------------------------------------------------------
    def terms(self):
        """(exponents, coefficient) pairs in graded-lex descending order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def as_dict(self):
        return dict(self._terms)

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), Fraction(0))

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_term(self):
        return self._terms.get((0,) * self.ring.nvars, Fraction(0))

    def leading_term(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=grlex_key)
        return e, self._terms[e]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def total_degree(self):
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def degree(self, var):
        i = self.ring.index(var)
        if not self._terms:
            return -1
        return max(e[i] for e in self._terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self._terms}
        return len(degs) <= 1

    def variables(self):
        """Names of the variables that actually occur."""
        used = set()
        for e in self._terms:
            used.update(i for i, k in enumerate(e) if k)
        return tuple(self.ring.names[i] for i in sorted(used))

    def as_variable(self):
        if len(self._terms) == 1:
            (e, c), = self._terms.items()
            if c == 1 and sum(e) == 1:
                return self.ring.names[e.index(1)]
        raise UnknownVariable(f"{self} is not a ring variable")

    def coefficients(self):
        return list(self._terms.values())

    # -- equality -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)) or hasattr(other, "field"):
            if not other:
                return not self._terms
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- arithmetic ---------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise ArityMismatch(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return MultiPoly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.ring, {e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        if not c:
            return MultiPoly._raw(self.ring, {})
        return MultiPoly._raw(self.ring, {e: v * c for e, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction)) or hasattr(other, "field"):
                return self.scale(other)
            return NotImplemented
        if other.ring != self.ring:
            raise ArityMismatch(f"ring mismatch: {self.ring} vs {other.ring}")
        out = {}
        get = out.get
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return MultiPoly._raw(self.ring, {e: c for e, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) or hasattr(other, "field"):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            return self.exquo(other)
        return self.scale(1 / _scalar(other))

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = self.ring.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def map_coeffs(self, fn):
        return MultiPoly(self.ring, {e: fn(c) for e, c in self._terms.items()})

    def monic(self):
        if not self._terms:
            return self
        return self.scale(1 / self.leading_coefficient())

    # -- division -----------------------------------------------------------
    def exquo(self, other):
        """Exact quotient ``self / other``; raises NotExactDivision on remainder."""
        other = self._lift(other)
        if not other._terms:
            raise ZeroDivisionError("division by zero polynomial")
        le, lc = other.leading_term()
        inv_lc = 1 / lc if not isinstance(lc, Fraction) else Fraction(lc.denominator, lc.numerator)
        rem = dict(self._terms)
        quot = {}
        while rem:
            e = max(rem, key=grlex_key)
            diff = tuple(a - b for a, b in zip(e, le))
            if any(d < 0 for d in diff):
                raise NotExactDivision(f"{other} does not divide {self}")
            c = rem[e] * inv_lc
            quot[diff] = c
            for e2, c2 in other._terms.items():
                t = tuple(a + b for a, b in zip(e2, diff))
                v = rem.get(t)
                v = -c * c2 if v is None else v - c * c2
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return MultiPoly._raw(self.ring, quot)

    # -- evaluation / substitution -------------------------------------------
    def eval(self, point):
        """Exact value at ``point`` (one value per ring variable)."""
        point = list(point)
        if len(point) != self.ring.nvars:
            raise ArityMismatch(f"expected {self.ring.nvars} values, got {len(point)}")
        total = Fraction(0)
        cache = [dict() for _ in point]
        for e, c in self._terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    p = cache[i].get(k)
                    if p is None:
                        p = point[i] ** k
                        cache[i][k] = p
                    term = term * p
            total = total + term
        return total

    __call__ = eval

    def subs(self, bindings, ring=None):
        """Ring homomorphism substituting polynomials for variables.

        ``bindings`` maps variable names (or generators) to MultiPolys over the
        target ring (or scalars).  Unbound variables map to the variable of the
        same name in the target ring.
        """
        target = ring or self.ring
        if not isinstance(target, PolyRing):
            target = PolyRing(target)
        images = []
        bound = {self.ring.index(k): v for k, v in bindings.items()}
        for i, name in enumerate(self.ring.names):
            if i in bound:
                v = bound[i]
                if isinstance(v, MultiPoly):
                    if v.ring != target:
                        raise ArityMismatch(f"binding for {name} lives in {v.ring}, expected {target}")
                else:
                    v = target.const(v)
                images.append(v)
            else:
                if name not in target._index:
                    raise ArityMismatch(f"unbound variable {name} missing from target ring {target}")
                images.append(target.gen(name))
        return self.compose(images, target)

    def compose(self, images, target=None):
        """Substitute ``images[i]`` for the i-th variable."""
        if len(images) != self.ring.nvars:
            raise ArityMismatch(f"expected {self.ring.nvars} images, got {len(images)}")
        if target is None:
            target = next((im.ring for im in images if isinstance(im, MultiPoly)), self.ring)
        images = [im if isinstance(im, MultiPoly) else target.const(im) for im in images]
        power_cache = [dict() for _ in images]

        def power(i, k):
            p = power_cache[i].get(k)
            if p is None:
                p = images[i] if k == 1 else power(i, k - 1) * images[i]
                power_cache[i][k] = p
            return p

        acc = {}
        for e, c in self._terms.items():
            term = None
            for i, k in enumerate(e):
                if k:
                    term = power(i, k) if term is None else term * power(i, k)
            if term is None:
                items = {(0,) * target.nvars: c}.items()
            else:
                items = ((te, tc * c) for te, tc in term._terms.items())
            for te, tc in items:
                v = acc.get(te)
                acc[te] = tc if v is None else v + tc
        return MultiPoly._raw(target, {e: c for e, c in acc.items() if c})

    def change_ring(self, ring):
        """Re-embed into a ring whose variables are a superset (by name)."""
        if not isinstance(ring, PolyRing):
            ring = PolyRing(ring)
        idx = []
        for i, name in enumerate(self.ring.names):
            if name in ring._index:
                idx.append(ring._index[name])
            else:
                idx.append(None)
        out = {}
        for e, c in self._terms.items():
            new = [0] * ring.nvars
            for i, k in enumerate(e):
                if k:
                    if idx[i] is None:
                        raise ArityMismatch(f"variable {self.ring.names[i]} not in {ring}")
                    new[idx[i]] = k
            out[tuple(new)] = c
        return MultiPoly._raw(ring, out)

    # -- calculus -----------------------------------------------------------
    def diff(self, var):
        i = self.ring.index(var)
        out = {}
        for e, c in self._terms.items():
            k = e[i]
            if k:
                ne = e[:i] + (k - 1,) + e[i + 1:]
                out[ne] = c * k
        return MultiPoly._raw(self.ring, out)

    def gradient(self):
        return [self.diff(i) for i in range(self.ring.nvars)]

    def homogeneous_part(self, d, variables=None):
        """Sum of the terms whose degree in ``variables`` (default: all) equals ``d``."""
        if variables is None:
            idx = range(self.ring.nvars)
        else:
            idx = [self.ring.index(v) for v in variables]
        return MultiPoly._raw(
            self.ring,
            {e: c for e, c in self._terms.items() if sum(e[i] for i in idx) == d},
        )

    def coeffs_in(self, var):
        """Coefficients of ``self`` as a polynomial in ``var``, low-to-high (same ring)."""
        i = self.ring.index(var)
        n = self.degree(i)
        parts = [dict() for _ in range(max(n + 1, 0))]
        for e, c in self._terms.items():
            parts[e[i]][e[:i] + (0,) + e[i + 1:]] = c
        return [MultiPoly._raw(self.ring, p) for p in parts]

    # -- univariate bridge -------------------------------------------------
    def to_dense(self, var=None):
        """Low-to-high coefficient list; the polynomial must involve only ``var``."""
        if var is None:
            used = self.variables()
            if len(used) > 1:
                raise ArityMismatch(f"{self} is not univariate")
            i = self.ring.index(used[0]) if used else 0
        else:
            i = self.ring.index(var)
        if not self._terms:
            return []
        n = max(e[i] for e in self._terms)
        out = [Fraction(0)] * (n + 1)
        for e, c in self._terms.items():
            if any(k for j, k in enumerate(e) if j != i):
                raise ArityMismatch(f"{self} involves variables other than {self.ring.names[i]}")
            out[e[i]] = c
        return out

    @classmethod
    def from_dense(cls, coeffs, ring, var):
        ring = ring if isinstance(ring, PolyRing) else PolyRing(ring)
        i = ring.index(var)
        n = ring.nvars
        terms = {}
        for k, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = k
                terms[tuple(e)] = _scalar(c)
        return cls._raw(ring, terms)

    # -- rendering ----------------------------------------------------------
    def __str__(self):
        from .textfmt import render_poly

        return render_poly(self)

    def __repr__(self):
        return f"MultiPoly({self.ring.names}, {self})"
