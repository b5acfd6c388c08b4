"""Exact scalar arithmetic: rationals, simple algebraic extensions of Q, prime fields.

Rationals are :class:`fractions.Fraction` (always reduced, denominator
positive).  Elements of ``Q[x]/(m(x))`` are stored as integer numerators
over one positive common denominator, which keeps the hot multiply loop in
machine-friendly ``int`` arithmetic.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from numbers import Rational as _RationalABC

from .errors import (
    CompositeModulus,
    DegreeZero,
    FieldMismatch,
    NotMonic,
    ReducibleModulus,
)

Rational = Fraction


def _normalize(nums, den):
    if den < 0:
        nums = [-n for n in nums]
        den = -den
    g = den
    for n in nums:
        if n:
            g = gcd(g, n)
            if g == 1:
                break
    else:
        if not any(nums):
            return tuple(0 for _ in nums), 1
    if g != 1:
        nums = [n // g for n in nums]
        den //= g
    return tuple(nums), den


# ---------------------------------------------------------------------------
# dense univariate helpers over Q (low-to-high Fraction lists); kept private so
# numfield has no dependency on polyalg.

def _strip(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _divmod(a, b):
    a = _strip(a)
    b = _strip(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    inv_lc = 1 / Fraction(b[-1])
    while len(a) >= len(b) and a:
        c = a[-1] * inv_lc
        k = len(a) - len(b)
        q[k] = c
        for i, bi in enumerate(b):
            a[i + k] -= c * bi
        a = _strip(a)
    return _strip(q), a


def _mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _strip(out)


def _sub(a, b):
    n = max(len(a), len(b))
    return _strip([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _xgcd(a, b):
    """Return (g, s) with g monic gcd(a, b) and s*a = g mod b."""
    r0, r1 = _strip(a), _strip(b)
    s0, s1 = [Fraction(1)], []
    while r1:
        q, r = _divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(s0, _mul(q, s1))
    lc = r0[-1]
    return [c / lc for c in r0], [c / lc for c in s0]


# ---------------------------------------------------------------------------

class ExtensionField:
    """The residue ring ``Q[x]/(m(x))`` for a monic ``m`` of degree >= 1.

    Irreducibility of ``m`` is not checked; a zero divisor shows up as
    :class:`ReducibleModulus` on inversion.

    ``conj_image`` (coefficients of the image of the generator under complex
    conjugation) and ``root_order`` (the generator is a primitive root of unity
    of that order) are optional metadata used by character theory and
    eigenvalue search.
    """

    def __init__(self, modulus, name=None, gen_name="a", conj_image=None, root_order=None):
        coeffs = _strip(Fraction(c) for c in modulus)
        if len(coeffs) <= 1:
            raise DegreeZero("modulus must have degree >= 1")
        if coeffs[-1] != 1:
            raise NotMonic(f"modulus leading coefficient is {coeffs[-1]}, expected 1")
        self.modulus = tuple(coeffs)
        self.degree = d = len(coeffs) - 1
        self.name = name or f"Q[{gen_name}]/({self._modulus_str(gen_name)})"
        self.gen_name = gen_name
        self.root_order = root_order
        self._conj_image = None if conj_image is None else tuple(Fraction(c) for c in conj_image)

        # x^k mod m for k = d .. 2d-2, as integer rows over a shared denominator
        rows = []
        cur = [-c for c in coeffs[:d]]  # x^d
        for _ in range(d, 2 * d - 1):
            rows.append(list(cur))
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            if top:
                cur = [cur[i] - top * coeffs[i] for i in range(d)]
        den = 1
        for row in rows:
            for c in row:
                den = lcm(den, c.denominator)
        self._red_den = den
        self._red_rows = [tuple(int(c * den) for c in row) for row in rows]
        self._mod_nums = tuple(int(c * den) for c in coeffs)

    def _modulus_str(self, g):
        parts = []
        for k in range(len(self.modulus) - 1, -1, -1):
            c = self.modulus[k]
            if not c:
                continue
            mon = "1" if k == 0 else g if k == 1 else f"{g}^{k}"
            if k == 0:
                parts.append(str(c))
            else:
                parts.append(mon if c == 1 else f"{c}*{mon}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- identity -----------------------------------------------------------
    def __eq__(self, other):
        return self is other or (isinstance(other, ExtensionField) and self.modulus == other.modulus)

    def __hash__(self):
        return hash(("ExtensionField", self.modulus))

    def __repr__(self):
        return f"ExtensionField({self.name})"

    # -- constructors -------------------------------------------------------
    def __call__(self, coeffs):
        """Element with the given low-to-high rational coefficients (reduced mod m)."""
        if isinstance(coeffs, ExtElem):
            if coeffs.field != self:
                raise FieldMismatch(f"{coeffs.field} vs {self}")
            return coeffs
        if isinstance(coeffs, (int, _RationalABC)):
            coeffs = [coeffs]
        fr = [Fraction(c) for c in coeffs]
        if len(fr) > self.degree:
            _, fr = _divmod(fr, list(self.modulus))
        den = 1
        for c in fr:
            den = lcm(den, c.denominator)
        nums = [int(c * den) for c in fr] + [0] * (self.degree - len(fr))
        return ExtElem._make(self, *_normalize(nums, den))

    @property
    def gen(self):
        return self([0, 1]) if self.degree > 1 else self([-self.modulus[0]])

    @property
    def one(self):
        return self([1])

    @property
    def zero(self):
        return self([0])

    def conj_image(self):
        if self._conj_image is None:
            return None
        return self(self._conj_image)

    def roots_of_unity(self):
        """All roots of unity in the field when known, else ``None``."""
        if self.root_order is None:
            return None
        n = self.root_order
        z = self.gen
        roots = [z ** k for k in range(n)]
        if n % 2:
            roots += [-r for r in roots]
        return roots


class ExtElem:
    """Immutable element of an :class:`ExtensionField`."""

    __slots__ = ("field", "nums", "den", "_hash")

    @classmethod
    def _make(cls, field, nums, den):
        obj = object.__new__(cls)
        obj.field = field
        obj.nums = nums
        obj.den = den
        obj._hash = None
        return obj

    @property
    def coeffs(self):
        return tuple(Fraction(n, self.den) for n in self.nums)

    # -- coercion -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, ExtElem):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.nums, other.den
        if isinstance(other, int):
            return (other,) + (0,) * (self.field.degree - 1), 1
        if isinstance(other, Fraction):
            return (other.numerator,) + (0,) * (self.field.degree - 1), other.denominator
        return None

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        onums, oden = c
        if oden == self.den:
            nums = [a + b for a, b in zip(self.nums, onums)]
            return ExtElem._make(self.field, *_normalize(nums, self.den))
        nums = [a * oden + b * self.den for a, b in zip(self.nums, onums)]
        return ExtElem._make(self.field, *_normalize(nums, self.den * oden))

    __radd__ = __add__

    def __neg__(self):
        return ExtElem._make(self.field, tuple(-n for n in self.nums), self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        onums, oden = c
        nums = [a * oden - b * self.den for a, b in zip(self.nums, onums)]
        return ExtElem._make(self.field, *_normalize(nums, self.den * oden))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ExtElem._make(self.field, *_normalize([n * other for n in self.nums], self.den))
        if isinstance(other, Fraction):
            return ExtElem._make(
                self.field,
                *_normalize([n * other.numerator for n in self.nums], self.den * other.denominator),
            )
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        onums, oden = c
        f = self.field
        d = f.degree
        a = self.nums
        prod = [0] * (2 * d - 1)
        for i in range(d):
            ai = a[i]
            if ai:
                for j in range(d):
                    bj = onums[j]
                    if bj:
                        prod[i + j] += ai * bj
        rd = f._red_den
        if rd == 1:
            out = prod[:d]
            for k, row in enumerate(f._red_rows):
                pk = prod[d + k]
                if pk:
                    for i in range(d):
                        if row[i]:
                            out[i] += pk * row[i]
        else:
            out = [p * rd for p in prod[:d]]
            for k, row in enumerate(f._red_rows):
                pk = prod[d + k]
                if pk:
                    for i in range(d):
                        out[i] += pk * row[i]
        return ExtElem._make(f, *_normalize(out, self.den * oden * rd))

    __rmul__ = __mul__

    def inv(self):
        if not any(self.nums):
            raise ZeroDivisionError("inverse of zero in extension field")
        f = self.field
        g, s = _xgcd(list(self.coeffs), list(f.modulus))
        if len(g) > 1:
            raise ReducibleModulus(
                f"element not invertible modulo {f.name}; modulus is reducible",
                factor=tuple(g),
            )
        return f(s)

    def __truediv__(self, other):
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return ExtElem._make(self.field, *_normalize(list(self.nums), self.den * other))
        if isinstance(other, Fraction):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return ExtElem._make(
                self.field,
                *_normalize([n * other.denominator for n in self.nums], self.den * other.numerator),
            )
        if isinstance(other, ExtElem):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            if other.is_rational():
                return self / other.to_rational()
            return self * other.inv()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inv() * other
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison ---------------------------------------------------------
    def is_rational(self):
        return not any(self.nums[1:])

    def to_rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    def __bool__(self):
        return any(self.nums)

    def __eq__(self, other):
        if isinstance(other, ExtElem):
            return (other.field is self.field or other.field == self.field) and (
                self.nums == other.nums and self.den == other.den
            )
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.nums[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.nums[0], self.den))
            else:
                self._hash = hash((self.nums, self.den))
        return self._hash

    # -- field maps ---------------------------------------------------------
    def apply_hom(self, image):
        """Evaluate the representing polynomial at ``image`` (an element of any ring)."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * image + c
        return acc

    def conjugate(self):
        img = self.field.conj_image()
        if img is None:
            raise ValueError(f"complex conjugation not defined on {self.field.name}")
        return self.apply_hom(img) + self.field.zero

    def __repr__(self):
        return f"ExtElem({self})"

    def __str__(self):
        g = self.field.gen_name
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mon = g if k == 1 else f"{g}^{k}"
                parts.append(mon if c == 1 else f"-{mon}" if c == -1 else f"{c}*{mon}")
        if not parts:
            return "0"
        s = " + ".join(parts)
        return s.replace("+ -", "- ")


def is_rational_scalar(x):
    return isinstance(x, (int, Fraction)) or (isinstance(x, ExtElem) and x.is_rational())


def conj(x):
    """Complex conjugate of a scalar (identity on rationals)."""
    if isinstance(x, ExtElem):
        return x.conjugate()
    return x


def ext_make(modulus, **kwargs):
    return ExtensionField(modulus, **kwargs)


def ext_arith(a, b, op):
    if isinstance(a, ExtElem) and isinstance(b, ExtElem) and a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def ext_inv(a):
    return a.inv()


# ---------------------------------------------------------------------------
# cyclotomic fields

@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Integer coefficients (low-to-high) of the n-th cyclotomic polynomial."""
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            num, r = _divmod(num, [Fraction(c) for c in cyclotomic_polynomial(d)])
            assert not r
    return tuple(int(c) for c in num)


def cyclotomic_field(n, gen_name="z"):
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    # conj(z) = z^(n-1); reduce to a representative of degree < d
    conj_rep = [Fraction(0)] * (n - 1) + [Fraction(1)]
    _, conj_rep = _divmod(conj_rep, [Fraction(c) for c in phi])
    conj_rep = list(conj_rep) + [Fraction(0)] * (d - len(conj_rep))
    return ExtensionField(phi, name=f"Q(zeta{n})", gen_name=gen_name, conj_image=conj_rep, root_order=n)


SQRT3 = ExtensionField([-3, 0, 1], name="Q(sqrt3)", gen_name="r3", conj_image=[0, 1])
SQRTM3 = ExtensionField([3, 0, 1], name="Q(sqrt-3)", gen_name="i3", conj_image=[0, -1])
SQRT5 = ExtensionField([-5, 0, 1], name="Q(sqrt5)", gen_name="r5", conj_image=[0, 1])
ZETA5 = cyclotomic_field(5, gen_name="z")
ZETA20 = cyclotomic_field(20, gen_name="e")


def sqrt5_in_zeta5():
    """The element 1 + 2z + 2z^4 of Q(zeta5); it squares to 5."""
    z = ZETA5.gen
    return 1 + 2 * z + 2 * z ** 4


def zeta5_to_zeta20(x):
    """Embed Q(zeta5) into Q(zeta20) via zeta5 -> zeta20^4."""
    if isinstance(x, ExtElem):
        if x.field != ZETA5:
            raise FieldMismatch(f"expected Q(zeta5), got {x.field}")
        return x.apply_hom(ZETA20.gen ** 4) + ZETA20.zero
    return x


# ---------------------------------------------------------------------------
# prime fields

def is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


class PrimeFieldElem:
    __slots__ = ("modulus", "value")

    def __init__(self, value, modulus):
        if not is_prime(modulus):
            raise CompositeModulus(f"{modulus} is not prime")
        self.modulus = modulus
        if isinstance(value, Fraction):
            if value.denominator % modulus == 0:
                raise ZeroDivisionError(f"denominator divisible by {modulus}")
            value = value.numerator * pow(value.denominator, -1, modulus)
        self.value = value % modulus

    def _other(self, other):
        if isinstance(other, PrimeFieldElem):
            if other.modulus != self.modulus:
                raise FieldMismatch(f"GF({self.modulus}) vs GF({other.modulus})")
            return other.value
        if isinstance(other, int):
            return other % self.modulus
        return None

    def _new(self, v):
        obj = object.__new__(PrimeFieldElem)
        obj.modulus = self.modulus
        obj.value = v % self.modulus
        return obj

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self._new(self.value - o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self._new(o - self.value)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self._new(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.value)

    def inv(self):
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._new(pow(self.value, -1, self.modulus))

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * self._new(o).inv()

    def __pow__(self, k):
        return self._new(pow(self.value, k, self.modulus))

    def __eq__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self.value == o

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.modulus})"
