"""Projection from a node: degeneration sextics and plane-curve certificates.

Plane curves live in the ring ``z1 z2 z3``.  Singular points are counted
exactly with triangular sets ``(m(z1), h(z1, z2))`` split on demand when a
zero divisor turns up (dynamic evaluation), so no splitting field is ever
built.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd as igcd

from .errors import (
    ChartMissesPoint,
    DegenerateQuadraticPart,
    DegreeDropped,
    InvalidInput,
    LineIsComponent,
    NotANode,
    NotOnConic,
    NotOnSurface,
    NotSquareFree,
    PointNotOnConic,
    PrimeDividesLeading,
    ReducibleModulus,
    SingularConic,
)
from .hashimoto import hashimoto_quartic, node_certificate, w4_point
from .numfield import SQRT3, SQRT5, SQRTM3, ExtensionField, is_prime
from .polyalg import univar as U
from .polyalg.linalg import det_bareiss, kernel_basis
from .polyalg.modp import irreducible_mod_p
from .polyalg.poly import MultiPoly, PolyRing
from .polyalg.resultant import resultant_wrt
from .polyalg.textfmt import parse_poly
from .projective import ProjPoint

Y_RING = PolyRing("y1 y2 y3")
Z_RING = PolyRing("z1 z2 z3")
BIN_RING = PolyRing("s t")
_Z12 = PolyRing("z1 z2")

# ---------------------------------------------------------------------------
# named curves of the 10-nodal case

LINE_L = parse_poly("1*z3", Z_RING)
CONIC_GAMMA = parse_poly("z3*z1 + z3*z2 + z1^2 + z1*z2 + z2^2", Z_RING)
CUBIC_ZETA = parse_poly(
    "z2*z3^2 + z1*z3^2 + z1^2*z3 + 5*z1*z2*z3 + 4*z1^2*z2 + z2^2*z3 + 4*z1*z2^2", Z_RING
)
X10_PRODUCT = LINE_L * CONIC_GAMMA * CUBIC_ZETA
X10P_SEXTIC = parse_poly(
    "-16*z1^6 - 16*z2^6 - 13*z2^2*z3^4 - 13*z1^2*z3^4 - 42*z2^3*z3^3 - 61*z2^4*z3^2"
    " - 42*z1^3*z3^3 - 61*z1^4*z3^2 + 12*z1^4*z2^2 + 104*z1^3*z2^3 + 12*z1^2*z2^4"
    " - 48*z1^5*z2 - 48*z1^5*z3 - 48*z1*z2^5 - 48*z2^5*z3 + 93*z1^2*z2^2*z3^2"
    " - 26*z1^3*z2*z3^2 - 12*z1^2*z2*z3^3 - 12*z1*z2^2*z3^3 - 72*z1^4*z2*z3"
    " + 120*z1^2*z2^3*z3 - 72*z1*z2^4*z3 - 26*z1*z2^3*z3^2 - 10*z1*z2*z3^4"
    " + 120*z1^3*z2^2*z3",
    Z_RING,
)


def _printed_affine():
    """The affine equation as printed; its chart is centred at [-2:0:0:1:1]."""
    y1, y2, y3 = Y_RING.gens
    a = y1 + y2 + y3 + 2
    b = y3 + 1
    lhs = a ** 4 + y1 ** 4 + y2 ** 4 + b ** 4 + 1
    inner = a ** 2 + y1 ** 2 + y2 ** 2 + b ** 2 + 1
    return lhs - inner * inner * Fraction(1, 2)


EQ_AFFINE_PRINTED = _printed_affine()


# ---------------------------------------------------------------------------
# charts


@dataclass(frozen=True)
class ChartRecipe:
    """x1..x4 as affine-linear polynomials in y1, y2, y3."""

    name: str
    images: tuple

    @property
    def origin(self):
        return ProjPoint([im.constant_term() for im in self.images])


def _chart(name, offsets):
    y = Y_RING.gens
    images = [y[0] + offsets[0], y[1] + offsets[1], y[2] + offsets[2], Y_RING.const(1)]
    return ChartRecipe(name, tuple(images))


CHARTS = {
    # node [0:0:0:-1:1]: x1 = y1, x2 = y2, x3 = y3 - 1, x4 = 1
    "x10": _chart("x10", (0, 0, -1)),
    # the printed substitution y3 = x3/x4 - 1, which is centred elsewhere
    "x10-printed": _chart("x10-printed", (0, 0, 1)),
    # node [-2:-2:-2:3:3] scaled by x4 = 1
    "x10p": _chart("x10p", (Fraction(-2, 3), Fraction(-2, 3), 1)),
}


@dataclass(frozen=True)
class AffineQuartic:
    poly: MultiPoly

    def part(self, d):
        return self.poly.homogeneous_part(d)


def node_chart(lam, node, chart):
    if isinstance(chart, str):
        chart = CHARTS[chart]
    if not isinstance(node, ProjPoint):
        node = w4_point(node)
    try:
        rep = node_certificate(lam, node)
    except NotOnSurface as exc:
        raise NotANode(str(exc)) from exc
    if not rep.is_node:
        raise NotANode(f"{node} is not a node of the member lambda = {lam}")
    if chart.origin != node:
        raise ChartMissesPoint(f"chart {chart.name} is centred at {chart.origin}, not {node}")
    F = hashimoto_quartic(lam).equation
    q = F.compose(list(chart.images), Y_RING)
    if q.homogeneous_part(0) or q.homogeneous_part(1):
        raise NotANode("chart polynomial has low-order terms")
    return AffineQuartic(q)


def _to_z(f):
    return f.compose(list(Z_RING.gens), Z_RING)


def discriminant_sextic(q):
    """A3^2 - 4 A2 A4 for q = A2 + A3 + A4 split into homogeneous parts."""
    poly = q.poly if isinstance(q, AffineQuartic) else q
    A2 = poly.homogeneous_part(2)
    if A2.is_zero():
        raise DegenerateQuadraticPart("quadratic part vanishes")
    A3, A4 = poly.homogeneous_part(3), poly.homogeneous_part(4)
    A2, A3, A4 = _to_z(A2), _to_z(A3), _to_z(A4)
    return A3 * A3 - A2 * A4 * 4


def equal_up_to_scalar(f, g):
    """c with f = c*g, normalising by graded-lex leading terms; None otherwise."""
    if f.is_zero() or g.is_zero():
        return Fraction(1) if f.is_zero() and g.is_zero() else None
    ef, cf = f.leading_term()
    eg, cg = g.leading_term()
    if ef != eg:
        return None
    c = cf / cg
    return c if f == g * c else None


# ---------------------------------------------------------------------------
# conics


def gram_matrix(q):
    n = q.ring.nvars
    return [[q.diff(i).diff(j).constant_term() for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class ConicParam:
    forms: tuple
    base: ProjPoint
    line_index: int
    conic: MultiPoly

    def __call__(self, s, t):
        return ProjPoint([f.eval([s, t]) for f in self.forms])


def _lin(coeffs, ring):
    return sum((g * c for g, c in zip(ring.gens, coeffs) if c), ring.zero())


def conic_param(c, base):
    """Rational parametrisation of a smooth conic by lines through ``base``.

    Directions q run over the coordinate line z_k = 0 (k the largest index
    with base_k != 0); the second intersection is Q(q) p - (grad Q(p) . q) q.
    """
    if not isinstance(base, ProjPoint):
        base = ProjPoint(base)
    if c.total_degree() != 2 or not c.is_homogeneous():
        raise InvalidInput("conic must be a quadratic form")
    if det_bareiss(gram_matrix(c)) == 0:
        raise SingularConic("conic is singular")
    p = list(base.coords)
    if c.eval(p):
        raise NotOnConic(f"{base} does not lie on the conic")
    k = max(i for i, x in enumerate(p) if x)
    s, t = BIN_RING.gens
    others = [i for i in range(3) if i != k]
    q = [BIN_RING.zero()] * 3
    q[others[0]], q[others[1]] = s, t
    Qq = c.compose(q, BIN_RING)
    grad = [g.eval(p) for g in c.gradient()]
    Bq = sum((qi * gi for qi, gi in zip(q, grad) if gi), BIN_RING.zero())
    forms = tuple(Qq * pi - Bq * qi for pi, qi in zip(p, q))
    return ConicParam(forms, base, k, c)


def _parameter_of(param, point):
    """(s, t) with param(s, t) = point."""
    p = list(param.base.coords)
    x = list(point.coords)
    k = param.line_index
    others = [i for i in range(3) if i != k]
    if point == param.base:
        grad = [g.eval(p) for g in param.conic.gradient()]
        a, b = grad[others[0]], grad[others[1]]
        # tangent direction on z_k = 0
        return (b, -a) if (a or b) else (1, 0)
    q = [xi * p[k] - pi * x[k] for xi, pi in zip(x, p)]
    return q[others[0]], q[others[1]]


def binary_root_multiplicity(P, s0, t0):
    """Multiplicity of (s0 : t0) as a root of the binary form P(s, t)."""
    if P.is_zero():
        raise InvalidInput("zero binary form")
    if t0:
        r = s0 / t0
        dense = P.subs({"t": 1}).to_dense("s")
    else:
        r = 0
        dense = P.subs({"s": 1}).to_dense("t")
    return U.root_multiplicity(dense, r)


def pullback_root_multiplicity(curve, param, p):
    if not isinstance(p, ProjPoint):
        p = ProjPoint(p)
    if param.conic.eval(list(p.coords)):
        raise PointNotOnConic(f"{p} is not on the parametrised conic")
    P = curve.compose(list(param.forms), BIN_RING)
    s0, t0 = _parameter_of(param, p)
    return binary_root_multiplicity(P, s0, t0)


# ---------------------------------------------------------------------------
# line sections


def _squarefree_int(n):
    """(r, d) with n = r^2 * d and d squarefree (trial division)."""
    sign = -1 if n < 0 else 1
    n = abs(n)
    r, d = 1, 1
    k = 2
    while k * k <= n:
        e = 0
        while n % k == 0:
            n //= k
            e += 1
        r *= k ** (e // 2)
        if e % 2:
            d *= k
        k += 1
    d *= n
    return r, sign * d


def quadratic_field(d):
    known = {3: SQRT3, -3: SQRTM3, 5: SQRT5}
    if d in known:
        return known[d]
    return ExtensionField([-d, 0, 1], name=f"Q(sqrt{d})", gen_name=f"r{d}".replace("-", "m"))


def quadratic_roots(a):
    """Roots of a monic quadratic with rational coefficients, over Q(sqrt d)."""
    c0, c1 = Fraction(a[0]), Fraction(a[1])
    D = c1 * c1 - 4 * c0
    num, den = D.numerator * D.denominator, D.denominator
    r, d = _squarefree_int(num)
    K = quadratic_field(d)
    sq = K.gen * Fraction(r, den)  # sqrt(D)
    return K, [(-c1 + sq) / 2, (-c1 - sq) / 2]


@dataclass(frozen=True)
class IntersectionPoint:
    point: ProjPoint | None
    multiplicity: int
    field: str
    degree: int = 1
    minimal_poly: tuple = ()


def line_curve_transversality(line, curve):
    """Intersection points of a line with a plane curve, with multiplicities."""
    coeffs = [line.coefficient(tuple(int(i == j) for j in range(3))) for i in range(3)]
    if line.total_degree() != 1 or not line.is_homogeneous():
        raise InvalidInput("line must be a linear form")
    u, v = kernel_basis([coeffs])
    s, t = BIN_RING.gens
    images = [s * a + t * b for a, b in zip(u, v)]
    P = curve.compose(images, BIN_RING)
    if P.is_zero():
        raise LineIsComponent("the line is a component of the curve")
    d = P.total_degree()
    out = []
    # the point u (t = 0): multiplicity is the t-adic order
    order_t = min(e[1] for e in P.as_dict())
    if order_t:
        out.append(IntersectionPoint(ProjPoint(u), order_t, "Q"))
    dense = P.subs({"t": 1}).to_dense("s")
    for factor, mult in U.squarefree_decomposition(dense):
        rest = factor
        for r in U.rational_roots(factor):
            out.append(IntersectionPoint(ProjPoint([r * a + b for a, b in zip(u, v)]), mult, "Q"))
            rest = U.exquo(rest, [-r, Fraction(1)])
        if len(rest) == 3:
            K, roots = quadratic_roots(U.monic(rest))
            for r in roots:
                out.append(
                    IntersectionPoint(ProjPoint([r * a + b for a, b in zip(u, v)]), mult, K.name, 2, tuple(rest))
                )
        elif len(rest) > 3:
            out.append(IntersectionPoint(None, mult, "closed point", len(rest) - 1, tuple(rest)))
    total = sum(ip.multiplicity * (ip.degree if ip.point is None else 1) for ip in out)
    if total != d:
        raise ArithmeticError("intersection bookkeeping failed")
    return out


# ---------------------------------------------------------------------------
# singular points by triangular decomposition


def _poly_in_z2(f, K):
    """Dense list over K = Q[z1]/(m) of the z2-coefficients of f(z1, z2)."""
    coeffs = f.coeffs_in("z2")
    return U.strip([K(c.to_dense("z1") or [0]) for c in coeffs])


def _rep(poly):
    """Rational coefficient lists of a dense K-polynomial (K-independent form)."""
    return [list(c.coeffs) for c in poly]


def _from_rep(rep, K):
    return U.strip([K(c) for c in rep])


def _monic_q(a):
    return U.monic([Fraction(x) for x in a])


def dynamic_gcd(m, reps):
    """Monic gcd of K-polynomials over Q[z1]/(m), splitting m on zero divisors.

    Returns a list of (m_i, rep_i) with the m_i multiplying to m.
    """
    out = []
    stack = [_monic_q(m)]
    while stack:
        mm = stack.pop()
        if len(mm) < 2:
            continue
        K = ExtensionField(mm, gen_name="z1")
        try:
            g = []
            for r in reps:
                g = U.gcd(g, _from_rep(r, K))
            out.append((mm, _rep(g)))
        except ReducibleModulus as exc:
            a = _monic_q(exc.factor)
            b = U.exquo(mm, a)
            stack.extend([b, a])
    out.sort(key=lambda x: (len(x[0]), [str(c) for c in x[0]]))
    return out


@dataclass(frozen=True)
class TriangularSet:
    m: MultiPoly
    h: MultiPoly
    points: int
    is_node: bool

    def as_text(self):
        return {"m": str(self.m), "h": str(self.h), "points": self.points, "nodes": self.is_node}


@dataclass(frozen=True)
class SingularLocusReport:
    components: tuple
    infinity_components: tuple
    total_points: int
    node_count: int
    all_nodes: bool
    infinity_checked: bool
    chart: int
    shear: int = 0
    notes: dict = field(default_factory=dict)


def _rep_to_poly(mm, rep):
    z1, z2 = _Z12.gens
    m_poly = MultiPoly.from_dense(mm, _Z12, "z1")
    h_poly = _Z12.zero()
    for k, c in enumerate(rep):
        h_poly = h_poly + MultiPoly.from_dense(c, _Z12, "z1") * z2 ** k
    return m_poly, h_poly


def _affine_singular(f, hess):
    """Triangular components of {f = fx = fy = 0} for f(z1, z2) with constant z2-lead."""
    fx, fy = f.diff("z1"), f.diff("z2")
    r_y = resultant_wrt(f, fy, "z2")
    if r_y.is_zero():
        raise NotSquareFree("f shares a component with its z2-derivative")
    if fx.degree("z2") >= 1:
        r_x = resultant_wrt(f, fx, "z2")
    else:
        r_x = fx
    m = U.gcd(r_y.to_dense("z1"), r_x.to_dense("z1")) if not r_x.is_zero() else U.monic(r_y.to_dense("z1"))
    m = U.squarefree_part(m)
    if len(m) < 2:
        return []
    K0 = ExtensionField(m, gen_name="z1")
    reps = [_rep(_poly_in_z2(p, K0)) for p in (f, fy, fx)]
    pieces = []
    for mm, g in dynamic_gcd(m, reps):
        if len(g) < 2:
            continue
        # square-free part of g over Q[z1]/(mm)
        K = ExtensionField(mm, gen_name="z1")
        gd = _rep(U.deriv(_from_rep(g, K)))
        for m2, c in dynamic_gcd(mm, [g, gd]):
            K2 = ExtensionField(m2, gen_name="z1")
            h = U.monic(U.exquo(_from_rep(g, K2), _from_rep(c, K2)))
            if len(h) < 2:
                continue
            hrep = _rep(h)
            hr = _rep(_poly_in_z2(hess, K2))
            for m3, c3 in dynamic_gcd(m2, [hrep, hr]):
                K3 = ExtensionField(m3, gen_name="z1")
                node = len(c3) < 2
                if node:
                    pieces.append((m3, hrep, True))
                    continue
                # split h into the part meeting the Hessian and the rest
                common = _from_rep(c3, K3)
                rest = U.exquo(_from_rep(hrep, K3), common)
                pieces.append((m3, _rep(common), False))
                if len(rest) >= 2:
                    pieces.append((m3, _rep(U.monic(rest)), True))
    return pieces


def _binary_gcd_points(forms, hess_at_inf):
    """Singular points on z3 = 0 given the three partials restricted there."""
    # [1:0:0]
    count, nodes, comps = 0, 0, []
    if all(not f.eval([1, 0, 0]) for f in forms):
        count += 1
        is_node = bool(hess_at_inf["origin"])
        nodes += int(is_node)
        comps.append(("[1:0:0]", 1, is_node))
    dense = [f.subs({"z2": 1, "z3": 0}).to_dense("z1") for f in forms]
    g = []
    for d in dense:
        g = U.gcd(g, d)
    g = U.squarefree_part(g) if g else g
    if len(g) >= 2:
        hd = hess_at_inf["chart"]
        c = U.gcd(g, hd) if hd else g
        bad = len(c) - 1 if len(c) >= 2 else 0
        good = len(g) - 1 - bad
        count += len(g) - 1
        nodes += good
        comps.append((str(MultiPoly.from_dense(g, Z_RING, "z1")), len(g) - 1, bad == 0))
    return count, nodes, comps


def _hess_det(f, a, b):
    return f.diff(a).diff(a) * f.diff(b).diff(b) - f.diff(a).diff(b) ** 2


def singular_points(c, chart=2):
    """Exact count of singular points of a square-free plane curve.

    ``chart`` selects the coordinate set to 1 for the affine part; the line
    where it vanishes is examined separately.
    """
    if c.ring != Z_RING:
        c = c.change_ring(Z_RING)
    if c.is_zero() or not c.is_homogeneous():
        raise InvalidInput("plane curve must be a nonzero form")
    if chart != 2:
        order = [i for i in range(3) if i != chart] + [chart]
        c = c.compose([Z_RING.gens[order.index(i)] for i in range(3)], Z_RING)
    z1, z2, z3 = Z_RING.gens

    on_line = [c.diff(i).subs({"z3": 0}) for i in range(3)]
    if all(p.is_zero() for p in on_line):
        raise NotSquareFree("the line z3 = 0 is a multiple component")

    # shear z1 -> z1 + k z2 until the chart polynomial has constant z2-lead
    for k in (0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5):
        cs = c.compose([z1 + z2 * k, z2, z3], Z_RING) if k else c
        f = cs.subs({"z3": 1}).change_ring(_Z12)
        if f.is_constant():
            break
        lead = f.coeffs_in("z2")[-1]
        if lead.is_constant():
            break
    else:
        raise InvalidInput("no admissible shear found")
    if f.is_constant():
        pieces = []
    else:
        pieces = _affine_singular(f, _hess_det(f, "z1", "z2"))

    comps = []
    total = nodes = 0
    for mm, hrep, is_node in pieces:
        m_poly, h_poly = _rep_to_poly(mm, hrep)
        pts = (len(mm) - 1) * (len(hrep) - 1)
        comps.append(TriangularSet(m_poly, h_poly, pts, is_node))
        total += pts
        nodes += pts if is_node else 0

    inf_forms = [cs.diff(i).subs({"z3": 0}) for i in range(3)]
    h_chart = _hess_det(cs.subs({"z2": 1}), "z1", "z3").subs({"z3": 0})
    h_origin = _hess_det(cs.subs({"z1": 1}), "z2", "z3").eval([0, 0, 0])
    cnt, nd, inf_comps = _binary_gcd_points(
        inf_forms, {"chart": h_chart.to_dense("z1"), "origin": h_origin}
    )
    total += cnt
    nodes += nd
    return SingularLocusReport(
        tuple(comps), tuple(inf_comps), total, nodes, nodes == total, True, chart, k
    )


# ---------------------------------------------------------------------------
# irreducibility over Q


def _primes_below(n):
    return [p for p in range(2, n) if is_prime(p)]


def _specialize(c, value):
    """Integer coefficients (low to high in z1) of c(z1, value, 1), made primitive."""
    dense = c.subs({"z2": value, "z3": 1}).to_dense("z1")
    den = 1
    for x in dense:
        den = den * Fraction(x).denominator // igcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in dense]
    g = 0
    for x in ints:
        g = igcd(g, x)
    return [x // g for x in ints] if g else ints


def q_irreducibility_cert(c, p, value):
    """True certifies c irreducible over Q; False is inconclusive.

    If c = g*h with z3 not dividing c and c primitive in z1 over Q[z2] (chart
    z3 = 1), both factors keep positive z1-degree under z2 -> value while the
    leading coefficient survives, and reduction mod p keeps the split.
    """
    if c.ring != Z_RING:
        c = c.change_ring(Z_RING)
    f = c.subs({"z3": 1})
    if f.total_degree() < c.total_degree():
        return False  # z3 divides c
    n = f.degree("z1")
    if n < 1:
        return False
    coeffs = [q.to_dense("z2") for q in f.coeffs_in("z1")]
    content = []
    for q in coeffs:
        content = U.gcd(content, q)
    if len(content) > 1:
        return False
    spec = _specialize(c, Fraction(value))
    if len(U.strip(spec)) - 1 < n:
        raise DegreeDropped(f"z2 -> {value} lowers the z1-degree")
    if spec[-1] % p == 0:
        raise PrimeDividesLeading(f"{p} divides the leading coefficient")
    return irreducible_mod_p(spec, p)


@dataclass(frozen=True)
class IrreducibilitySearch:
    certified: bool
    prime: int | None
    value: int | None
    attempts: int


def search_irreducibility_cert(c, prime_bound=100, value_bound=10):
    """Primes ascending, then values ascending; first success is the least pair."""
    attempts = 0
    for p in _primes_below(prime_bound):
        for v in range(-value_bound, value_bound + 1):
            attempts += 1
            try:
                if q_irreducibility_cert(c, p, v):
                    return IrreducibilitySearch(True, p, v, attempts)
            except (DegreeDropped, PrimeDividesLeading):
                continue
    return IrreducibilitySearch(False, None, None, attempts)
