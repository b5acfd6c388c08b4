from fractions import Fraction
from itertools import permutations

import pytest
import sympy

from icosa.errors import IndeterminatePoint, InvalidInput, NotOnSurface, QuadricPoint, UnsupportedIndex
from icosa.grouprep import act_on_poly, w4_matrices
from icosa.hashimoto import (
    NODAL_LAMBDAS,
    SIGMA5,
    SIGMA10,
    SIGMA10P,
    SIGMA15,
    a5_orbit,
    ci_genus,
    five_coords,
    hashimoto_quartic,
    incidence_census,
    lambda_through,
    node_certificate,
    plane_orbit,
    power_sum_form,
    quadrics_through_rank,
    special_zeta_points,
    w4_point,
    x15_tangent_cone,
)
from icosa.numfield import ZETA5
from icosa.projective import ProjPoint

REPS = {"S5": SIGMA5, "S10": SIGMA10, "S10'": SIGMA10P, "S15": SIGMA15}


def _even(perm):
    inversions = sum(1 for i in range(5) for j in range(i + 1, 5) if perm[i] > perm[j])
    return inversions % 2 == 0


def _orbit_by_permutation(five):
    # independent oracle: act on the five coordinates directly
    out = set()
    for perm in permutations(range(5)):
        if _even(perm):
            out.add(ProjPoint([five[perm[i]] for i in range(5)][1:]))
    return out


def _lambda_by_hand(five):
    s2 = sum(Fraction(x) ** 2 for x in five)
    s4 = sum(Fraction(x) ** 4 for x in five)
    return s4 / s2 ** 2


def test_power_sum_examples():
    assert power_sum_form(2).eval([1, 1, 1, 1]) == 20
    z = ZETA5.gen
    pt = [z, z ** 2, z ** 3, z ** 4]
    assert power_sum_form(3).eval(pt) == 0
    assert power_sum_form(5).eval(pt) == 5
    with pytest.raises(UnsupportedIndex):
        power_sum_form(6)


@pytest.mark.parametrize("i", [2, 3, 4, 5])
def test_power_sums_invariant(i):
    F = power_sum_form(i)
    assert F.is_homogeneous() and F.total_degree() == i
    for g in w4_matrices():
        assert act_on_poly(g, F) == F


def test_hashimoto_quartic():
    assert hashimoto_quartic(0).equation == power_sum_form(4)
    m = hashimoto_quartic(Fraction(13, 20))
    F2 = power_sum_form(2)
    assert m.equation == power_sum_form(4) - F2 * F2 * Fraction(13, 20)
    for g in w4_matrices():
        assert act_on_poly(g, m.equation) == m.equation


def test_w4_point_validation():
    assert w4_point(-4, 1, 1, 1, 1) == ProjPoint([1, 1, 1, 1])
    assert five_coords(w4_point(SIGMA10)) == [0, 0, 0, 1, -1]
    with pytest.raises(InvalidInput):
        w4_point(1, 1, 1, 1, 1)


@pytest.mark.parametrize("name,lam", [("S5", "13/20"), ("S10", "1/2"), ("S10'", "7/30"), ("S15", "1/4")])
def test_lambda_values(name, lam):
    rep = REPS[name]
    assert lambda_through(w4_point(rep)) == Fraction(lam)
    assert _lambda_by_hand(rep) == Fraction(lam)
    assert NODAL_LAMBDAS[name][0] == Fraction(lam)


@pytest.mark.parametrize("name", list(REPS))
def test_lambda_constant_on_orbit(name):
    lams = {lambda_through(p) for p in a5_orbit(REPS[name])}
    assert len(lams) == 1


def test_lambda_errors():
    z = ZETA5.gen
    with pytest.raises(IndeterminatePoint):
        lambda_through(ProjPoint([z, z ** 2, z ** 3, z ** 4]))
    # F2 = 0 but F4 != 0 at [1:i:-1:-i:0]
    from icosa.numfield import ext_make

    i = ext_make([1, 0, 1], gen_name="i").gen
    p = ProjPoint([i, -1, -i, 0])
    assert power_sum_form(2).eval(list(p.coords)) == 0
    assert power_sum_form(4).eval(list(p.coords)) == 4
    with pytest.raises(QuadricPoint):
        lambda_through(p)


def test_orbit_lengths_and_oracle():
    lengths = {}
    for name, rep in REPS.items():
        orb = a5_orbit(rep)
        assert set(orb.points) == _orbit_by_permutation(rep)
        lengths[name] = orb.length
        assert a5_orbit(orb.sorted()[-1]).points == orb.points
    assert lengths == {"S5": 5, "S10": 10, "S10'": 10, "S15": 15}


def test_nodes_against_sympy():
    xs = sympy.symbols("x1:5")
    x0 = -sum(xs)
    s2 = x0 ** 2 + sum(x ** 2 for x in xs)
    s4 = x0 ** 4 + sum(x ** 4 for x in xs)
    for name, (lam, rep) in NODAL_LAMBDAS.items():
        F = sympy.expand(s4 - sympy.Rational(lam.numerator, lam.denominator) * s2 ** 2)
        grad = [sympy.diff(F, x) for x in xs]
        for p in a5_orbit(rep):
            ours = node_certificate(lam, p)
            assert ours.is_node
            sub = dict(zip(xs, [sympy.Rational(c.numerator, c.denominator) for c in p.coords]))
            assert all(g.subs(sub) == 0 for g in grad)
            j = ours.chart
            keep = [xs[i] for i in range(4) if i != j]
            H = sympy.Matrix(3, 3, lambda a, b: sympy.diff(F, keep[a], keep[b]).subs(sub))
            assert H.rank() == 3


def test_node_certificate_not_on_surface():
    with pytest.raises(NotOnSurface):
        node_certificate(0, w4_point(SIGMA5))


def test_smooth_point_of_s15():
    # search lines through a node for a rational point of S15 away from the orbit
    lam = Fraction(1, 4)
    F = hashimoto_quartic(lam).equation
    orbit = a5_orbit(SIGMA15)
    found = None
    for v in ((1, 2, 3, 5), (2, -1, 4, 1), (1, 1, -3, 7)):
        for node in orbit.sorted():
            # F(node + t v) = t^2 (a + b t + c t^2); rational root of the quadratic
            from icosa.polyalg.poly import PolyRing

            T = PolyRing("t")
            t = T.gens[0]
            g = F.compose([T.const(n) + t * c for n, c in zip(node.coords, v)], T)
            a2, a3, a4 = (g.coefficient((k,)) for k in (2, 3, 4))
            if a4 and not a2 and a3:
                found = [n - a3 / a4 * c for n, c in zip(node.coords, v)]
                break
            if a4 and a2:
                disc = a3 * a3 - 4 * a2 * a4
                r = sympy.sqrt(sympy.Rational(disc.numerator, disc.denominator))
                if r.is_Rational:
                    root = (-a3 + Fraction(int(r.p), int(r.q))) / (2 * a4)
                    if root:
                        found = [n + root * c for n, c in zip(node.coords, v)]
                        break
        if found:
            break
    if found is None:
        pytest.skip("no rational point found on the sampled lines")
    p = ProjPoint(found)
    assert p not in orbit
    assert not node_certificate(lam, p).gradient_zero


def test_lambdas_distinct_and_f2_not_a_component():
    lams = [v[0] for v in NODAL_LAMBDAS.values()]
    assert len(set(lams)) == 4
    F2 = power_sum_form(2)
    for lam in lams:
        eq = hashimoto_quartic(lam).equation
        from icosa.errors import NotExactDivision

        with pytest.raises(NotExactDivision):
            eq.exquo(F2)


def test_quadric_ranks():
    assert quadrics_through_rank(a5_orbit(SIGMA10)) == 10
    assert quadrics_through_rank(a5_orbit(SIGMA10P)) == 10
    assert quadrics_through_rank(a5_orbit(SIGMA5)) == 5
    assert quadrics_through_rank([w4_point(SIGMA5)]) == 1
    assert quadrics_through_rank(a5_orbit(SIGMA15)) == 10


def test_quadric_rank_against_sympy():
    rows = []
    for p in a5_orbit(SIGMA10P):
        c = [sympy.Rational(x.numerator, x.denominator) for x in p.coords]
        rows.append([c[i] * c[j] for i in range(4) for j in range(i, 4)])
    assert sympy.Matrix(rows).rank() == 10


def test_special_zeta_points():
    r = special_zeta_points()
    assert r.orbit_lengths == (12, 12)
    assert r.vanishing and r.f5_nonzero
    assert set(r.jacobian_ranks) == {3} and len(r.jacobian_ranks) == 24
    assert r.f5_at_reference == 5
    assert len(r.five_cycle_fixed) == 4


def test_incidence_sigma10():
    rep = incidence_census(a5_orbit(SIGMA10))
    assert rep.lines_with_3plus == 10
    assert all(len(line) == 3 for line in rep.lines)
    assert rep.line_orbits == ((10, 3),)
    collinear = [w4_point(0, 0, 0, -1, 1), w4_point(0, 0, -1, 0, 1), w4_point(0, 0, -1, 1, 0)]
    assert any(set(collinear) == set(line) for line in rep.lines)


def test_incidence_sigma10p():
    rep = incidence_census(a5_orbit(SIGMA10P))
    assert rep.planes_with_4plus == 25
    assert rep.plane_orbits == ((10, 4), (15, 4))
    assert rep.witness_plane is not None
    printed = [w4_point(c) for c in ((-2, -2, -2, 3, 3), (-2, -2, 3, -2, 3), (-2, -2, 3, 3, -2), (3, 3, -2, -2, -2))]
    ten = plane_orbit(printed)
    assert len(ten) == 10 and all(len(pl) == 4 for pl in ten)
    per_point = {}
    for pl in ten:
        for p in pl:
            per_point[p] = per_point.get(p, 0) + 1
    assert set(per_point.values()) == {4}


def test_incidence_sigma5():
    assert incidence_census(a5_orbit(SIGMA5)).lines_with_3plus == 0


def test_ci_genus():
    assert ci_genus(2, 3) == 4
    assert ci_genus(2, 4) == 9
    assert ci_genus(1, 1) == 0
    with pytest.raises(InvalidInput):
        ci_genus(0, 2)


def test_x15_tangent_cone():
    rep = x15_tangent_cone()
    assert rep.ok
    assert str(rep.R2) == "-16*y1*y2 + 4*y3^2"
    assert rep.image_of_O == ProjPoint([0, 0, 0, 1])
    assert rep.sigma_fixes_R
