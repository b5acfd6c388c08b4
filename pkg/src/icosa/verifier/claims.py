"""Registry of checkable statements, each bound to a computation.

Modules are referenced through their module objects so that a test can swap
a function (for instance a corrupted F4) and see every dependent claim fail.
"""
from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .. import conicbundle as cb
from .. import grouprep as gr
from .. import hashimoto as hs
from .. import u4w3
from ..projective import ProjPoint
from .render import plain

# in-scope computational topics; every one needs at least one claim
SCOPE = (
    "symmetric-powers",
    "u4-sym2",
    "u4-pencil-dimension",
    "u4-orbit-census",
    "u4-nodal-members",
    "u4-tangent-developable",
    "iw3-quadric-pencil",
    "hashimoto-pencil",
    "nodal-lambdas",
    "node-certificates",
    "incidence",
    "q-factoriality",
    "x10-affine-chart",
    "x10-discriminant",
    "x10-tacnodes",
    "x10p-nine-nodes",
    "x15-tangent-cone",
    "bring-zeta-points",
    "ci-genus",
)


@dataclass(frozen=True)
class ClaimSpec:
    id: str
    topic: str
    description: str
    paper_anchor: str
    runner: Callable
    expected: object
    comparator: str = "exact"

    def run(self):
        return self.runner()


def _compare(kind, expected, computed):
    if kind == "exact":
        return plain(expected) == plain(computed)
    if kind == "scalar":
        return cb.equal_up_to_scalar(computed, expected) not in (None, 0)
    if kind == "set":
        return set(map(str, plain(expected))) == set(map(str, plain(computed)))
    raise ValueError(f"unknown comparator {kind}")


# ---------------------------------------------------------------------------
# runners


def _lambda(rep):
    return lambda: hs.lambda_through(hs.w4_point(rep))


def _nodes(name):
    def run():
        lam, rep = hs.NODAL_LAMBDAS[name]
        orb = hs.a5_orbit(rep)
        good = sum(1 for p in orb if hs.node_certificate(lam, p).is_node)
        return {"orbit": len(orb), "nodes": good}

    return run


def _orbit_lengths():
    return [len(hs.a5_orbit(rep)) for _, rep in hs.NODAL_LAMBDAS.values()]


def _pencil_invariance():
    gens = gr.w4_matrices()
    return all(
        gr.act_on_poly(g, hs.power_sum_form(i)) == hs.power_sum_form(i) for g in gens for i in (2, 3, 4, 5)
    )


def _w4_dims():
    return {d: u4w3.invariant_dim("W4", d) for d in (2, 4)}


def _rank(rep):
    return lambda: hs.quadrics_through_rank(hs.a5_orbit(rep))


def _lines():
    rep = hs.incidence_census(hs.a5_orbit(hs.SIGMA10))
    per_point = Counter(p for line in rep.lines for p in line)
    return {
        "lines": rep.lines_with_3plus,
        "points_per_line": sorted({len(l) for l in rep.lines}),
        "lines_per_point": sorted(set(per_point.values())),
    }


def _planes():
    quad = [hs.w4_point(c) for c in ((-2, -2, -2, 3, 3), (-2, -2, 3, -2, 3), (-2, -2, 3, 3, -2), (3, 3, -2, -2, -2))]
    planes = hs.plane_orbit(quad)
    per_point = Counter(p for pl in planes for p in pl)
    rep = hs.incidence_census(hs.a5_orbit(hs.SIGMA10P))
    return {
        "planes_in_orbit": len(planes),
        "points_per_plane": sorted({len(pl) for pl in planes}),
        "planes_per_point": sorted(set(per_point.values())),
        "witness_no_three_collinear": rep.witness_plane is not None,
    }


def _x10_chart():
    q = cb.node_chart(Fraction(1, 2), hs.SIGMA10, "x10")
    H = [[q.poly.diff(i).diff(j).constant_term() for j in range(3)] for i in range(3)]
    from ..polyalg.linalg import matrix_rank

    return {
        "low_order_vanishes": q.part(0).is_zero() and q.part(1).is_zero(),
        "hessian_rank": matrix_rank(H),
        "printed_equation_after_shift": q.poly
        == cb.EQ_AFFINE_PRINTED.subs({"y3": cb.Y_RING.gen("y3") - 2}),
    }


def _x10_disc():
    return cb.discriminant_sextic(cb.node_chart(Fraction(1, 2), hs.SIGMA10, "x10"))


def _x10_tacnodes():
    par = cb.conic_param(cb.CONIC_GAMMA, [0, 0, 1])
    return [cb.pullback_root_multiplicity(cb.CUBIC_ZETA, par, p) for p in ([0, 1, -1], [1, 0, -1], [0, 0, 1])]


def _x10_l_gamma():
    pts = cb.line_curve_transversality(cb.LINE_L, cb.CONIC_GAMMA)
    return {
        "multiplicities": [p.multiplicity for p in pts],
        "field": sorted({p.field for p in pts}),
        "conjugate_pair": len(pts) == 2 and pts[0].point.coords[1].conjugate() == pts[1].point.coords[1],
        "printed_point_on_gamma": _printed_point_on_gamma(),
    }


def _printed_point_on_gamma():
    from ..numfield import SQRT3

    p = [SQRT3.gen - 1, SQRT3.one * 2, SQRT3.zero]
    return not cb.CONIC_GAMMA.eval(p)


def _x10_l_zeta():
    pts = cb.line_curve_transversality(cb.LINE_L, cb.CUBIC_ZETA)
    return {"multiplicities": [p.multiplicity for p in pts], "fields": sorted({p.field for p in pts})}


def _x10_singular():
    r = cb.singular_points(cb.X10_PRODUCT)
    return {"points": r.total_points, "nodes": r.node_count, "all_nodes": r.all_nodes}


def _x10p_sextic():
    return cb.discriminant_sextic(cb.node_chart(Fraction(7, 30), hs.SIGMA10P, "x10p"))


def _x10p_nodes():
    r = cb.singular_points(cb.X10P_SEXTIC)
    return {"points": r.total_points, "all_nodes": r.all_nodes}


def _x10p_chart_independent():
    return [cb.singular_points(cb.X10P_SEXTIC, chart=k).total_points for k in (0, 1, 2)]


def _x10p_irreducible():
    s = cb.search_irreducibility_cert(cb.X10P_SEXTIC)
    return {"certified": s.certified, "prime": s.prime, "value": s.value}


def _x15(key):
    def run():
        rep = hs.x15_tangent_cone()
        return {
            "R2": rep.R2,
            "cone": rep.quadratic_part,
            "lines": {
                "on_cone": rep.lines_on_cone,
                "distinct_rulings": rep.lines_distinct_rulings,
                "swapped": rep.sigma_swaps_lines,
            },
            "frame": {
                "image_of_O": rep.image_of_O,
                "sigma_diagonal": rep.checks["sigma_diagonal"],
                "sigma_fixes_R": rep.sigma_fixes_R,
            },
        }[key]

    return run


def _bring():
    r = hs.special_zeta_points()
    return {
        "orbits": list(r.orbit_lengths),
        "F2=F3=F4=0": r.vanishing,
        "F5_nonzero": r.f5_nonzero,
        "jacobian_ranks": sorted(set(r.jacobian_ranks)),
    }


def _zeta_lambda():
    from ..errors import IndeterminatePoint
    from ..numfield import ZETA5

    z = ZETA5.gen
    try:
        hs.lambda_through(ProjPoint([z, z ** 2, z ** 3, z ** 4]))
    except IndeterminatePoint:
        return "indeterminate"
    return "determined"


def _groups():
    A = gr.a5_permutation_group()
    G = gr.binary_icosahedral()
    return {
        "A5": A.order,
        "2.A5": G.order,
        "A5_class_sizes": sorted(c.size for c in A.classes()),
        "2.A5_classes": len(G.classes()),
    }


def _sym2():
    return {k: v for k, v in u4w3.sym2_u4_decompose().items() if v}


def _table_orthonormal():
    tab = gr.character_table_2a5()
    names = list(tab)
    return all(
        gr.inner_product(tab[a], tab[b]) == (1 if a == b else 0) for a in names for b in names
    )


def _dims(model, degrees):
    return lambda: {d: u4w3.invariant_dim(model, d) for d in degrees}


def _u2u2_square():
    q2 = u4w3.invariant_space("U2+U2", 2).basis[0]
    q4 = u4w3.invariant_space("U2+U2", 4).basis[0]
    return cb.equal_up_to_scalar(q4, q2 * q2) is not None


def _census_empty():
    return {s: len(u4w3.fixed_point_census(s).fixed_points) for s in ("2.A4", "2.D10", "quaternion-8")}


def _census_dic():
    c = u4w3.fixed_point_census("dicyclic-12")
    return {
        "fixed_points": len(c.fixed_points),
        "orbit_lengths": list(c.orbit_lengths),
        "distinct_orbits": c.distinct_orbits,
        "complete": c.complete,
    }


def _u4_nodal():
    r = u4w3.u4_pencil_nodal_members()
    return {
        "members": len(r.members),
        "distinct": r.distinct,
        "all_nodes": [m.all_nodes for m in r.members],
        "generic_smooth_at_orbits": r.generic_gradients_nonzero,
    }


def _u4_disc():
    d = u4w3.binary_cubic_discriminant()
    return {
        "invariant": d.invariant,
        "reynolds_fixed": d.reynolds_fixed,
        "in_pencil": d.in_pencil,
        "gradient_vanishes_on_cubic": d.gradient_vanishes_on_cubic,
        "hessian_rank_at_cube": d.hessian_rank_at_cube,
    }


# ---------------------------------------------------------------------------
# registry

_ANCHOR_PENCIL = "F4 = lambda*F2^2, F_i = x0^i + ... + x4^i, x0 = -(x1 + ... + x4)"


def _claims():
    c = []
    add = c.append
    for name, key, val, rep in (
        ("S5", "s5", "13/20", hs.SIGMA5),
        ("S10", "s10", "1/2", hs.SIGMA10),
        ("S10'", "s10p", "7/30", hs.SIGMA10P),
        ("S15", "s15", "1/4", hs.SIGMA15),
    ):
        pt = "[" + ":".join(map(str, rep)) + "]"
        add(ClaimSpec(f"pencil.lambda.{key}", "nodal-lambdas",
                      f"pencil parameter through {pt}",
                      f"{_ANCHOR_PENCIL}; lambda = {val} at {pt}",
                      _lambda(rep), Fraction(val)))
        n = {"S5": 5, "S10": 10, "S10'": 10, "S15": 15}[name]
        add(ClaimSpec(f"pencil.nodes.{key}", "node-certificates",
                      f"every point of the orbit of {pt} is a node of {name}",
                      f"{name}: lambda = {val}, nodes at the A5-orbit of {pt}",
                      _nodes(name), {"orbit": n, "nodes": n}))
    add(ClaimSpec("pencil.orbit-lengths", "hashimoto-pencil",
                  "orbit lengths of the four rational representatives",
                  "|Sigma5| = 5, |Sigma10| = |Sigma10'| = 10, |Sigma15| = 15",
                  _orbit_lengths, [5, 10, 10, 15]))
    add(ClaimSpec("pencil.invariance", "hashimoto-pencil",
                  "F2..F5 are fixed by the W4 generators",
                  _ANCHOR_PENCIL, _pencil_invariance, True))
    add(ClaimSpec("pencil.invariant-dims", "hashimoto-pencil",
                  "A5-invariant forms on W4 in degrees 2 and 4",
                  "F2 unique invariant quadric; invariant quartics = span(F4, F2^2)",
                  _w4_dims, {2: 1, 4: 2}))
    add(ClaimSpec("pencil.zeta-point-indeterminate", "hashimoto-pencil",
                  "every member passes through the zeta5 points",
                  "F2 = F4 = 0 at [1:z:z^2:z^3:z^4]",
                  _zeta_lambda, "indeterminate"))
    add(ClaimSpec("qfact.sigma10", "q-factoriality",
                  "no quadric contains Sigma10",
                  "rank of quadric-monomial evaluations on Sigma10 = 10",
                  _rank(hs.SIGMA10), 10))
    add(ClaimSpec("qfact.sigma10p", "q-factoriality",
                  "no quadric contains Sigma10'",
                  "rank of quadric-monomial evaluations on Sigma10' = 10",
                  _rank(hs.SIGMA10P), 10))
    add(ClaimSpec("incidence.sigma10-lines", "incidence",
                  "ten lines through three points of Sigma10",
                  "[0:0:0:-1:1], [0:0:-1:0:1], [0:0:-1:1:0] collinear; 10 lines, 3 per point",
                  _lines, {"lines": 10, "points_per_line": [3], "lines_per_point": [3]}))
    add(ClaimSpec("incidence.sigma10p-planes", "incidence",
                  "ten planes through four points of Sigma10'",
                  "[-2:-2:-2:3:3], [-2:-2:3:-2:3], [-2:-2:3:3:-2], [3:3:-2:-2:-2] coplanar; 10 planes, 4 per point",
                  _planes, {"planes_in_orbit": 10, "points_per_plane": [4], "planes_per_point": [4],
                            "witness_no_three_collinear": True}))
    add(ClaimSpec("x10.affine-chart", "x10-affine-chart",
                  "chart at [0:0:0:-1:1] has a double point at the origin",
                  "S10 chart x4 = 1 centred at O = [0:0:0:-1:1]",
                  _x10_chart, {"low_order_vanishes": True, "hessian_rank": 3,
                               "printed_equation_after_shift": True}))
    add(ClaimSpec("x10.discriminant", "x10-discriminant",
                  "degeneration sextic of the projection from [0:0:0:-1:1]",
                  "C = z3 * gamma * zeta",
                  _x10_disc, cb.X10_PRODUCT, "scalar"))
    add(ClaimSpec("x10.tacnodes", "x10-tacnodes",
                  "gamma and zeta are tangent at three points",
                  "tangency at [0:1:-1], [1:0:-1], [0:0:1]",
                  _x10_tacnodes, [2, 2, 2]))
    add(ClaimSpec("x10.line-conic", "x10-tacnodes",
                  "l meets gamma transversally in a conjugate pair",
                  "l = {z3 = 0} meets gamma in two points",
                  _x10_l_gamma, {"multiplicities": [1, 1], "field": ["Q(sqrt-3)"],
                                 "conjugate_pair": True, "printed_point_on_gamma": False}))
    add(ClaimSpec("x10.line-cubic", "x10-tacnodes",
                  "l meets zeta transversally",
                  "l = {z3 = 0} meets zeta in three simple points",
                  _x10_l_zeta, {"multiplicities": [1, 1, 1], "fields": ["Q"]}))
    add(ClaimSpec("x10.singular-locus", "x10-discriminant",
                  "singular points of z3 * gamma * zeta",
                  "2 + 3 transversal points on l, 3 tacnodes on gamma and zeta",
                  _x10_singular, {"points": 8, "nodes": 5, "all_nodes": False}))
    add(ClaimSpec("x10p.sextic", "x10p-nine-nodes",
                  "degeneration sextic of the projection from [-2:-2:-2:3:3]",
                  "C = -16 z1^6 - 16 z2^6 - ... + 120 z1^3 z2^2 z3",
                  _x10p_sextic, cb.X10P_SEXTIC, "scalar"))
    add(ClaimSpec("x10p.nine-nodes", "x10p-nine-nodes",
                  "the sextic has exactly nine singular points, all nodes",
                  "C nodal with 9 nodes",
                  _x10p_nodes, {"points": 9, "all_nodes": True}))
    add(ClaimSpec("x10p.chart-independence", "x10p-nine-nodes",
                  "node count agrees in the three standard charts",
                  "C nodal with 9 nodes",
                  _x10p_chart_independent, [9, 9, 9]))
    add(ClaimSpec("x10p.irreducible", "x10p-nine-nodes",
                  "irreducibility over Q by specialisation mod p",
                  "C irreducible",
                  _x10p_irreducible, {"certified": True, "prime": 7, "value": -6}))
    add(ClaimSpec("x15.r2", "x15-tangent-cone",
                  "y4^2 coefficient of R in the adapted coordinates",
                  "x1 = y1-y3-y4, x2 = y2-y4, x3 = y1+y3+y4, x4 = y2+y4; R2 = 4y3^2 - 16y1y2",
                  _x15("R2"), "-16*y1*y2 + 4*y3^2"))
    add(ClaimSpec("x15.tangent-cone", "x15-tangent-cone",
                  "quadratic part of w^2 - R at O",
                  "16 y1 y2 = 4 y3^2 - w^2",
                  _x15("cone"), "16*y1*y2 - 4*y3^2 + 1*w^2"))
    add(ClaimSpec("x15.lines-swapped", "x15-tangent-cone",
                  "the lines y1 = w -+ 2y3 = 0 lie on the cone in different rulings and sigma swaps them",
                  "sigma: y1 -> y1, y2 -> y2, y3 -> -y3, y4 -> -y4, w -> w",
                  _x15("lines"), {"on_cone": True, "distinct_rulings": True, "swapped": True}))
    add(ClaimSpec("x15.frame", "x15-tangent-cone",
                  "O = [0:0:0:1] in y-coordinates and sigma is diagonal there",
                  "O = [0:-1:-1:1:1]; sigma: x1 <-> x3, x2 <-> x4",
                  _x15("frame"), {"image_of_O": "[0:0:0:1]", "sigma_diagonal": True, "sigma_fixes_R": True}))
    add(ClaimSpec("bring.zeta-points", "bring-zeta-points",
                  "the 24 zeta5-points: F2 = F3 = F4 = 0, F5 != 0, reduced intersection",
                  "Sigma12 + Sigma12' cut out on F2 = F3 = 0 by F4 = 0",
                  _bring, {"orbits": [12, 12], "F2=F3=F4=0": True, "F5_nonzero": True, "jacobian_ranks": [3]}))
    add(ClaimSpec("bring.genus", "ci-genus",
                  "genus of a smooth (2,3) complete intersection",
                  "F2 = F3 = 0 has genus 4",
                  lambda: hs.ci_genus(2, 3), 4))
    add(ClaimSpec("pencil.base-curve-genus", "ci-genus",
                  "genus of a smooth (2,4) complete intersection",
                  "F2 = F4 = 0 has genus 9",
                  lambda: hs.ci_genus(2, 4), 9))
    add(ClaimSpec("rep.group-orders", "symmetric-powers",
                  "closures of the explicit generators",
                  "|A5| = 60, |2.A5| = 120",
                  _groups, {"A5": 60, "2.A5": 120, "A5_class_sizes": [1, 12, 12, 15, 20], "2.A5_classes": 9}))
    add(ClaimSpec("rep.character-table", "symmetric-powers",
                  "the nine traced characters of 2.A5 are orthonormal",
                  "irreducibles I, U2, U2', W3, W3', W4, U4, W5, U6",
                  _table_orthonormal, True))
    add(ClaimSpec("rep.sym2-u4", "u4-sym2",
                  "decomposition of Sym^2(U4)",
                  "Sym^2(U4) = W3 + W3' + W4",
                  _sym2, {"W3": 1, "W3'": 1, "W4": 1}))
    add(ClaimSpec("rep.u4-invariants", "u4-pencil-dimension",
                  "invariant forms on U4",
                  "no invariant quadric in P(U4); invariant quartics form a pencil",
                  _dims("U4", (2, 4)), {2: 0, 4: 2}))
    add(ClaimSpec("rep.u2u2-invariants", "symmetric-powers",
                  "invariant forms on U2 + U2",
                  "the only invariant quartic in P(U2 + U2) is a double quadric",
                  _dims("U2+U2", (2, 4)), {2: 1, 4: 1}))
    add(ClaimSpec("rep.u2u2-square", "symmetric-powers",
                  "the invariant quartic on U2 + U2 is the square of the quadric",
                  "the only invariant quartic in P(U2 + U2) is a double quadric",
                  _u2u2_square, True))
    add(ClaimSpec("rep.u2u2p-invariants", "symmetric-powers",
                  "invariant quartics on U2 + U2'",
                  "no invariant quartic in P(U2 + U2')",
                  _dims("U2+U2'", (4,)), {4: 0}))
    add(ClaimSpec("rep.iw3-invariants", "iw3-quadric-pencil",
                  "invariant forms on I + W3",
                  "invariant quadrics in P(I + W3) form a pencil",
                  _dims("I+W3", (2, 4)), {2: 2, 4: 3}))
    add(ClaimSpec("u4.census-empty", "u4-orbit-census",
                  "2.A4, 2.D10 and Q8 have no fixed points in P(U4)",
                  "P(U4) has no A5-orbits of length 5, 6 or 15",
                  _census_empty, {"2.A4": 0, "2.D10": 0, "quaternion-8": 0}))
    add(ClaimSpec("u4.census-dicyclic", "u4-orbit-census",
                  "fixed points of the dicyclic group of order 12",
                  "exactly two A5-orbits of length 10 in P(U4)",
                  _census_dic, {"fixed_points": 2, "orbit_lengths": [10, 10], "distinct_orbits": 2,
                                "complete": True}))
    add(ClaimSpec("u4.nodal-members", "u4-nodal-members",
                  "members of the U4 pencil through the length-10 orbits",
                  "exactly two nodal members, singular at the two length-10 orbits",
                  _u4_nodal, {"members": 2, "distinct": True, "all_nodes": [True, True],
                              "generic_smooth_at_orbits": True}))
    add(ClaimSpec("u4.discriminant-quartic", "u4-tangent-developable",
                  "discriminant of binary cubics as the tangent developable",
                  "tangent lines of the twisted cubic sweep an invariant quartic singular along it",
                  _u4_disc, {"invariant": True, "reynolds_fixed": True, "in_pencil": True,
                             "gradient_vanishes_on_cubic": True, "hessian_rank_at_cube": 1}))
    return {cl.id: cl for cl in c}


REGISTRY = _claims()


def list_claims(prefix=None):
    ids = sorted(REGISTRY)
    if prefix:
        ids = [i for i in ids if i.startswith(prefix)]
    return [REGISTRY[i] for i in ids]


def evaluate(claim):
    """Run one claim; returns a JSON-ready result dict."""
    start = time.perf_counter()
    try:
        computed = claim.run()
        status = "pass" if _compare(claim.comparator, claim.expected, computed) else "fail"
        shown = plain(computed)
    except Exception as exc:  # captured per claim by design
        status = "error"
        shown = f"{type(exc).__name__}: {exc}"
    return {
        "id": claim.id,
        "status": status,
        "paper_anchor": claim.paper_anchor,
        "expected": plain(claim.expected),
        "computed": shown,
        "runtime_ms": int((time.perf_counter() - start) * 1000),
    }
