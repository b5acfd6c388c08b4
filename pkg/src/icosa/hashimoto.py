"""The pencil F4 = lambda * F2^2 on P(W4) and its special orbits.

Coordinates are x1..x4 with x0 = -(x1 + x2 + x3 + x4) eliminated.  Points
may be entered with five coordinates through :func:`w4_point`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import (
    IndeterminatePoint,
    InvalidInput,
    NonIntegral,
    NotOnSurface,
    QuadricPoint,
    UnsupportedIndex,
)
from .grouprep import a5_permutation_group, common_eigenvectors, w4_matrices, w4_perm_matrix
from .numfield import ZETA5
from .polyalg.linalg import det_bareiss, inverse, mat_vec, matrix_rank
from .polyalg.poly import MultiPoly, PolyRing
from .projective import ProjPoint, orbit

__all__ = [
    "RING",
    "ProjPoint",
    "OrbitSet",
    "PencilMember",
    "NodeReport",
    "power_sum_form",
    "hashimoto_quartic",
    "w4_point",
    "a5_orbit",
    "lambda_through",
    "node_certificate",
    "quadrics_through_rank",
    "special_zeta_points",
    "incidence_census",
    "ci_genus",
    "x15_tangent_cone",
]

RING = PolyRing("x1 x2 x3 x4")

# orbit representatives in the five coordinates x0..x4
SIGMA5 = (-4, 1, 1, 1, 1)
SIGMA10 = (0, 0, 0, -1, 1)
SIGMA10P = (-2, -2, -2, 3, 3)
SIGMA15 = (0, -1, -1, 1, 1)

NODAL_LAMBDAS = {
    "S5": (Fraction(13, 20), SIGMA5),
    "S10": (Fraction(1, 2), SIGMA10),
    "S10'": (Fraction(7, 30), SIGMA10P),
    "S15": (Fraction(1, 4), SIGMA15),
}


def w4_point(*coords):
    """ProjPoint in x1..x4 from five coordinates [x0:...:x4] summing to zero."""
    if len(coords) == 1 and not isinstance(coords[0], (int, Fraction)):
        coords = tuple(coords[0])
    if len(coords) == 4:
        return ProjPoint(coords)
    if len(coords) != 5:
        raise InvalidInput("expected 4 or 5 coordinates")
    if sum(coords, Fraction(0)) != 0:
        raise InvalidInput("five coordinates must sum to zero")
    return ProjPoint(coords[1:])


def five_coords(p):
    """[x0:...:x4] for a point given in x1..x4."""
    c = list(p.coords)
    return [-sum(c, Fraction(0))] + c


@lru_cache(maxsize=None)
def power_sum_form(i):
    """x0^i + ... + x4^i with x0 = -(x1 + ... + x4)."""
    if i not in (2, 3, 4, 5):
        raise UnsupportedIndex(f"power sum index {i} not in 2..5")
    gens = RING.gens
    x0 = -(gens[0] + gens[1] + gens[2] + gens[3])
    f = x0 ** i
    for x in gens:
        f = f + x ** i
    return f


@dataclass(frozen=True)
class PencilMember:
    lam: Fraction
    equation: MultiPoly

    def __call__(self, point):
        return self.equation.eval(list(point))


@lru_cache(maxsize=None)
def hashimoto_quartic(lam):
    lam = Fraction(lam)
    F2, F4 = power_sum_form(2), power_sum_form(4)
    return PencilMember(lam, F4 - F2 * F2 * lam)


@dataclass(frozen=True)
class OrbitSet:
    points: frozenset

    @property
    def length(self):
        return len(self.points)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, p):
        return p in self.points

    def sorted(self):
        return sorted(self.points, key=str)


def a5_orbit(p):
    if not isinstance(p, ProjPoint):
        p = w4_point(p)
    return OrbitSet(frozenset(orbit(p, w4_matrices(), bound=60)))


def lambda_through(p):
    """The pencil parameter of the unique member through p."""
    if not isinstance(p, ProjPoint):
        p = w4_point(p)
    v = list(p.coords)
    f2 = power_sum_form(2).eval(v)
    f4 = power_sum_form(4).eval(v)
    if not f2:
        if not f4:
            raise IndeterminatePoint("F2 and F4 both vanish; every member passes")
        raise QuadricPoint("F2 vanishes but F4 does not; no finite member passes")
    lam = f4 / (f2 * f2)
    if hasattr(lam, "is_rational") and lam.is_rational():
        lam = lam.to_rational()
    return lam


@dataclass(frozen=True)
class NodeReport:
    point: ProjPoint
    on_surface: bool
    gradient_zero: bool
    hessian_rank: int
    chart: int

    @property
    def is_node(self):
        return self.on_surface and self.gradient_zero and self.hessian_rank == 3


@lru_cache(maxsize=None)
def _derivatives(f):
    grad = tuple(f.diff(i) for i in range(f.ring.nvars))
    hess = tuple(tuple(g.diff(j) for j in range(f.ring.nvars)) for g in grad)
    return grad, hess


def hypersurface_node_report(f, p):
    """Gradient and chart-Hessian data of a form f at a projective point.

    The chart is the largest-index nonzero coordinate of p, scaled to 1.
    """
    j = max(i for i, c in enumerate(p.coords) if c)
    v = p.scaled_to(j)
    if f.eval(v):
        raise NotOnSurface(f"form does not vanish at {p}")
    grad, hess = _derivatives(f)
    gradient_zero = all(not g.eval(v) for g in grad)
    keep = [i for i in range(len(v)) if i != j]
    H = [[hess[a][b].eval(v) for b in keep] for a in keep]
    return NodeReport(p, True, gradient_zero, matrix_rank(H), j)


def node_certificate(lam, p):
    if not isinstance(p, ProjPoint):
        p = w4_point(p)
    return hypersurface_node_report(hashimoto_quartic(lam).equation, p)


def quadric_monomial_row(p):
    c = list(p.coords)
    return [c[i] * c[j] for i in range(4) for j in range(i, 4)]


def quadrics_through_rank(points):
    """Rank of the evaluation matrix of the ten quadratic monomials."""
    rows = [quadric_monomial_row(p) for p in points]
    return matrix_rank(rows)


# ---------------------------------------------------------------------------
# points over Q(zeta5)


@dataclass(frozen=True)
class ZetaPointsReport:
    five_cycle_fixed: tuple
    orbits: tuple
    vanishing: bool
    f5_nonzero: bool
    jacobian_ranks: tuple
    f5_at_reference: object

    @property
    def orbit_lengths(self):
        return tuple(len(o) for o in self.orbits)


def special_zeta_points():
    """The 24 common zeros of F2, F3, F4 over Q(zeta5) as two orbits of length 12."""
    cycle = w4_perm_matrix((1, 2, 3, 4, 0))
    fixed = common_eigenvectors([cycle], ZETA5)
    orbits = []
    for p in fixed:
        if any(p in o for o in orbits):
            continue
        orbits.append(a5_orbit(p))
    orbits.sort(key=lambda o: str(o.sorted()[0]))
    F2, F3, F4, F5 = (power_sum_form(i) for i in (2, 3, 4, 5))
    pts = [p for o in orbits for p in o.sorted()]
    vanishing = all(not F.eval(list(p.coords)) for p in pts for F in (F2, F3, F4))
    f5_nonzero = all(bool(F5.eval(list(p.coords))) for p in pts)
    jac = [F2.gradient(), F3.gradient(), F4.gradient()]
    ranks = tuple(matrix_rank([[g.eval(list(p.coords)) for g in row] for row in jac]) for p in pts)
    z = ZETA5.gen
    f5_ref = F5.eval([z, z ** 2, z ** 3, z ** 4])
    return ZetaPointsReport(tuple(fixed), tuple(orbits), vanishing, f5_nonzero, ranks, f5_ref)


# ---------------------------------------------------------------------------
# collinear triples and coplanar quadruples


@dataclass(frozen=True)
class IncidenceReport:
    lines_with_3plus: int
    planes_with_4plus: int
    witness_plane: tuple | None
    lines: tuple = field(default=(), repr=False)
    planes: tuple = field(default=(), repr=False)
    # A5-orbits of the lines and planes: (orbit length, points on each member)
    line_orbits: tuple = ()
    plane_orbits: tuple = ()


def _subset_orbits(subsets):
    gens = w4_matrices()
    remaining = set(subsets)
    out = []
    while remaining:
        start = min(remaining, key=lambda s: sorted(map(str, s)))
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for s in frontier:
                for g in gens:
                    t = frozenset(p.transform(g) for p in s)
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
            frontier = nxt
        remaining -= seen
        out.append((len(seen), len(start)))
    return tuple(sorted(out))


def plane_orbit(points):
    """A5-orbit of the plane spanned by ``points``, as point sets of a given orbit."""
    pts = list(points)
    full = a5_orbit(pts[0]).points
    base = frozenset(p for p in full if _rank_of(pts[:3] + [p]) == 3)
    gens = w4_matrices()
    seen = {base}
    frontier = [base]
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                t = frozenset(p.transform(g) for p in s)
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return sorted(seen, key=lambda s: sorted(map(str, s)))


def _rank_of(points):
    return matrix_rank([list(p.coords) for p in points])


def incidence_census(points):
    pts = sorted(points, key=str)
    lines = set()
    for a, b in combinations(pts, 2):
        on = frozenset(p for p in pts if _rank_of([a, b, p]) == 2)
        if len(on) >= 3:
            lines.add(on)
    planes = set()
    for a, b, c in combinations(pts, 3):
        if _rank_of([a, b, c]) < 3:
            continue
        on = frozenset(p for p in pts if _rank_of([a, b, c, p]) == 3)
        if len(on) >= 4:
            planes.add(on)
    witness = None
    for pl in sorted(planes, key=lambda s: sorted(map(str, s))):
        members = sorted(pl, key=str)
        if all(_rank_of(t) == 3 for t in combinations(members, 3)):
            witness = tuple(members)
            break
    return IncidenceReport(
        len(lines),
        len(planes),
        witness,
        tuple(sorted((tuple(sorted(l, key=str)) for l in lines), key=str)),
        tuple(sorted((tuple(sorted(pl, key=str)) for pl in planes), key=str)),
        _subset_orbits(lines),
        _subset_orbits(planes),
    )


def ci_genus(d1, d2):
    """Genus of a smooth complete intersection of degrees d1, d2 in P^3."""
    if d1 < 1 or d2 < 1:
        raise InvalidInput("degrees must be positive")
    twice = d1 * d2 * (d1 + d2 - 4)
    if twice % 2:
        raise NonIntegral(f"d1*d2*(d1+d2-4) = {twice} is odd")
    return twice // 2 + 1


# ---------------------------------------------------------------------------
# tangent cone of the 15-nodal double solid at [0:-1:-1:1:1]

Y_RING = PolyRing("y1 y2 y3 y4")
CONE_RING = PolyRing("y1 y2 y3 w")

# x_i as linear forms in y
_X_IN_Y = (
    (1, 0, -1, -1),
    (0, 1, 0, -1),
    (1, 0, 1, 1),
    (0, 1, 0, 1),
)
# sigma: x1 <-> x3, x2 <-> x4 (x0 fixed)
SIGMA_PERM = (0, 3, 4, 1, 2)


@dataclass(frozen=True)
class TangentConeReport:
    image_of_O: ProjPoint
    sigma_in_y: tuple
    R: MultiPoly
    R_parts: tuple
    R2: MultiPoly
    quadratic_part: MultiPoly
    lines_on_cone: bool
    lines_distinct_rulings: bool
    sigma_swaps_lines: bool
    sigma_fixes_R: bool
    chart_induced_action_swaps_rulings: bool
    checks: dict

    @property
    def ok(self):
        return all(self.checks.values())


def _apply_linear(matrix, ring, f):
    gens = ring.gens
    images = []
    for row in matrix:
        L = ring.zero()
        for a, g in zip(row, gens):
            if a:
                L = L + g * a
        images.append(L)
    return f.compose(images, ring)


def x15_tangent_cone():
    F2, F4 = power_sum_form(2), power_sum_form(4)
    R_x = F4 - F2 * F2 * Fraction(1, 4)
    x_images = [
        sum((Y_RING.gens[j] * c for j, c in enumerate(row) if c), Y_RING.zero()) for row in _X_IN_Y
    ]
    R = R_x.compose(x_images, Y_RING)

    M = [[Fraction(c) for c in row] for row in _X_IN_Y]
    Minv = inverse(M)
    O = w4_point(SIGMA15)
    image_O = ProjPoint(mat_vec(Minv, list(O.coords)))

    sigma_x = w4_perm_matrix(SIGMA_PERM)
    sigma_y = tuple(tuple(r) for r in _matmul(_matmul(Minv, sigma_x), M))
    sigma_fixes_R = _apply_linear(sigma_x, RING, R_x) == R_x

    parts = R.coeffs_in("y4")
    parts = tuple(parts) + (Y_RING.zero(),) * (5 - len(parts))
    # coefficient of y4^k is R_{4-k}
    R2 = parts[2]
    low = parts[4].is_zero() and parts[3].is_zero()

    y1, y2, y3, w = CONE_RING.gens
    affine = R.subs({"y4": 1}).change_ring(Y_RING)
    affine_c = affine.compose([y1, y2, y3, CONE_RING.const(1)], CONE_RING)
    local = w * w - affine_c
    quad = local.homogeneous_part(2)
    expected_quad = w * w - y3 * y3 * 4 + y1 * y2 * 16
    cone = y1 * y2 * 16 - y3 * y3 * 4 + w * w

    s, t = PolyRing("a b").gens
    P = PolyRing("a b")
    line_plus = [P.zero(), s, t, t * 2]
    line_minus = [P.zero(), s, t, t * (-2)]
    on_cone = all(cone.compose(L, P).is_zero() for L in (line_plus, line_minus))
    # two distinct lines meeting in one point lie in different rulings of a smooth quadric
    meet = matrix_rank([[0, 1, 0, 0], [0, 0, 1, 2], [0, 0, 1, -2]]) == 3
    cone_smooth = det_bareiss(_sym_matrix(cone)) != 0

    def on_line(param, sign):
        # point (y1, y2, y3, w) lies on {y1 = 0, w = sign * 2 y3}
        return param[0].is_zero() and (param[3] - param[2] * (2 * sign)).is_zero()

    literal = [line_plus[0], line_plus[1], -line_plus[2], line_plus[3]]
    swaps = on_line(literal, -1) and not on_line(literal, 1)
    chart = [-line_plus[0], -line_plus[1], line_plus[2], line_plus[3]]
    chart_swaps = on_line(chart, -1) and not on_line(chart, 1)

    expected_sigma = (
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 0, -1, 0),
        (0, 0, 0, -1),
    )
    checks = {
        "image_of_O": image_O == ProjPoint([0, 0, 0, 1]),
        "sigma_diagonal": sigma_y == tuple(tuple(Fraction(c) for c in r) for r in expected_sigma),
        "O_is_double_point": low,
        "R2": R2 == (y_sq(3) * 4 - Y_RING.gen("y1") * Y_RING.gen("y2") * 16),
        "tangent_cone": quad == expected_quad,
        "lines_on_cone": on_cone,
        "lines_distinct_rulings": meet and cone_smooth,
        "sigma_swaps_lines": swaps,
        "sigma_fixes_R": sigma_fixes_R,
    }
    return TangentConeReport(
        image_O, sigma_y, R, parts, R2, quad, on_cone, meet and cone_smooth, swaps,
        sigma_fixes_R, chart_swaps, checks,
    )


def y_sq(i):
    g = Y_RING.gen(f"y{i}")
    return g * g


def _matmul(a, b):
    return [[sum((x * y for x, y in zip(r, col)), Fraction(0)) for col in zip(*b)] for r in a]


def _sym_matrix(q):
    """Gram matrix (times 2) of a quadratic form."""
    n = q.ring.nvars
    return [[q.diff(i).diff(j).constant_term() for j in range(n)] for i in range(n)]


def orbit_representatives():
    return {name: w4_point(rep) for name, (_, rep) in NODAL_LAMBDAS.items()}


def group_order():
    return a5_permutation_group().order
