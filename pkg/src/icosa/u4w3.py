"""Invariant counts for the five P^3 models and the census for P(U4).

U4 = Sym^3 U2 is realised on binary cubics a0 t^3 + a1 t^2 s + a2 t s^2 + a3 s^3
with coordinates u0..u3 = a0..a3.  Fixed points of the order-12 dicyclic
subgroup need i, so the census runs over Q(zeta20).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import BasisDegenerate, InvalidInput, MethodMismatch, NotOnSurface
from .grouprep import (
    MODEL_NAMES,
    act_on_poly,
    binary_icosahedral,
    character_table_2a5,
    common_eigenvectors,
    decompose,
    evaluate_word,
    generate_group,
    invariant_dim_by_characters,
    mat_map,
    mat_mul,
    model_images,
    model_ring,
    reynolds_average,
    reynolds_invariant_basis,
    sym_power_char,
    sym_power_matrix,
    u2_matrices,
    fixed_subspace_dim,
)
from .hashimoto import hypersurface_node_report
from .numfield import ZETA20, zeta5_to_zeta20
from .polyalg.linalg import matrix_rank
from .polyalg.poly import MultiPoly
from .projective import ProjPoint, orbit

U_RING = model_ring("U4")


@dataclass(frozen=True)
class SubgroupSpec:
    name: str
    generator_words: tuple
    order: int


# words in S (order 10) and T (order 4); see u2_matrices
SUBGROUPS = (
    SubgroupSpec("2.A4", ("SSSTS", "T"), 24),
    SubgroupSpec("2.D10", ("SSTS", "T"), 20),
    SubgroupSpec("dicyclic-12", ("STSST", "SSSTS"), 12),
    SubgroupSpec("quaternion-8", ("SSSTSS", "STSST"), 8),
)


def subgroup(name):
    for s in SUBGROUPS:
        if s.name == name:
            return s
    raise InvalidInput(f"unknown subgroup {name!r}")


def subgroup_elements(spec):
    gens = [evaluate_word(w, u2_matrices()) for w in spec.generator_words]
    H = generate_group(gens, bound=120)
    if H.order != spec.order:
        raise InvalidInput(f"{spec.name}: words generate a group of order {H.order}")
    return H


# ---------------------------------------------------------------------------
# dimension counts


@dataclass(frozen=True)
class InvariantDim:
    model: str
    degree: int
    by_characters: int
    by_reynolds: int
    basis: tuple

    @property
    def dim(self):
        return self.by_characters


@lru_cache(maxsize=None)
def invariant_space(model, degree):
    if model not in MODEL_NAMES:
        raise InvalidInput(f"unknown model {model!r}")
    if not 1 <= degree <= 4:
        raise InvalidInput("degree must be in 1..4")
    chi = invariant_dim_by_characters(model, degree)
    basis = reynolds_invariant_basis(model_images(model), model_ring(model), degree)
    if chi != len(basis):
        raise MethodMismatch(f"{model}, degree {degree}: characters {chi}, Reynolds {len(basis)}")
    return InvariantDim(model, degree, int(chi), len(basis), tuple(basis))


def invariant_dim(model, degree):
    return invariant_space(model, degree).dim


def sym2_u4_decompose():
    table = character_table_2a5()
    return decompose(sym_power_char(table["U4"], 2), table)


# ---------------------------------------------------------------------------
# fixed-point census in P(U4)


def _u4_z20(g):
    return mat_map(sym_power_matrix(g, 3), zeta5_to_zeta20)


@lru_cache(maxsize=None)
def u4_generators_z20():
    return tuple(_u4_z20(g) for g in u2_matrices())


def commutator_subgroup(H):
    comms = set()
    inv = {g: _inverse_in(H, g) for g in H.elements}
    for a in H.elements:
        for b in H.elements:
            comms.add(mat_mul(mat_mul(a, b), mat_mul(inv[a], inv[b])))
    return generate_group(sorted(comms, key=str), bound=120)


def _inverse_in(H, g):
    e = H.elements[0]
    for h in H.elements:
        if mat_mul(g, h) == e:
            return h
    raise ArithmeticError("inverse not found")


@dataclass(frozen=True)
class CensusReport:
    subgroup: SubgroupSpec
    fixed_points: tuple
    orbit_lengths: tuple
    distinct_orbits: int
    eigenline_bound: int
    stabilizer_orders: tuple

    @property
    def complete(self):
        return len(self.fixed_points) == self.eigenline_bound


def fixed_point_census(spec):
    if isinstance(spec, str):
        spec = subgroup(spec)
    H = subgroup_elements(spec)
    mats = [_u4_z20(g) for g in H.generators]
    points = common_eigenvectors(mats, ZETA20)
    # the common eigenlines of H are the lines of [H,H]-fixed vectors that are
    # H-eigenlines; their total dimension bounds the count from above
    C = commutator_subgroup(H)
    bound = fixed_subspace_dim([_u4_z20(g) for g in C.generators]) if C.order > 1 else 4
    gens = u4_generators_z20()
    orbits = []
    lengths = []
    stabs = []
    G = binary_icosahedral()
    for p in points:
        orb = orbit(p, gens, bound=60)
        lengths.append(len(orb))
        if not any(p in o for o in orbits):
            orbits.append(orb)
        stab = sum(1 for g in G.elements if p.transform(_u4_z20(g)) == p) // 2
        stabs.append(stab)
    return CensusReport(spec, tuple(points), tuple(lengths), len(orbits), bound, tuple(stabs))


# ---------------------------------------------------------------------------
# the invariant pencil in P(U4)


def _lift(f):
    return f.map_coeffs(zeta5_to_zeta20)


@dataclass(frozen=True)
class NodalMember:
    parameter: object
    equation: MultiPoly
    orbit: tuple
    all_nodes: bool


@dataclass(frozen=True)
class PencilReport:
    basis: tuple
    members: tuple
    distinct: bool
    generic_parameter: object
    generic_gradients_nonzero: bool
    discriminant_coordinates: tuple


def _member(basis, t):
    b1, b2 = basis
    return b1 + b2 * t


def u4_pencil_nodal_members():
    """Members B1 + t B2 of the invariant quartic pencil through the length-10 orbits."""
    basis = tuple(_lift(b) for b in invariant_space("U4", 4).basis)
    if len(basis) != 2:
        raise BasisDegenerate(f"expected a pencil, found dimension {len(basis)}")
    census = fixed_point_census("dicyclic-12")
    gens = u4_generators_z20()
    members = []
    seen = []
    for p in census.fixed_points:
        orb = sorted(orbit(p, gens, bound=60), key=str)
        if any(set(orb) == set(o) for o in seen):
            continue
        seen.append(orb)
        ts = set()
        for q in orb:
            v = list(q.coords)
            b1, b2 = basis[0].eval(v), basis[1].eval(v)
            if not b2:
                raise BasisDegenerate("second basis form vanishes on the orbit")
            ts.add(-b1 / b2)
        if len(ts) != 1:
            raise BasisDegenerate("orbit is not contained in one member")
        t = ts.pop()
        eq = _member(basis, t)
        nodes = True
        for q in orb:
            try:
                rep = hypersurface_node_report(eq, q)
            except NotOnSurface:
                nodes = False
                break
            nodes = nodes and rep.is_node
        members.append(NodalMember(t, eq, tuple(orb), nodes))
    distinct = len({m.parameter for m in members}) == len(members)

    # a generic member is smooth at both orbits
    t_gen = Fraction(1, 7)
    eq = _member(basis, t_gen)
    grads = eq.gradient()
    generic_ok = all(
        any(g.eval(list(q.coords)) for g in grads) for m in members for q in m.orbit
    )
    D = _lift(binary_cubic_discriminant_form())
    coords = _pencil_coordinates(D, basis)
    return PencilReport(basis, tuple(members), distinct, t_gen, generic_ok, coords)


def _pencil_coordinates(f, basis):
    """(a, b) with f = a B1 + b B2, or None when f is outside the pencil."""
    b1, b2 = basis
    # solve on two monomials where the 2x2 system is nonsingular
    exps = sorted(set(b1.as_dict()) | set(b2.as_dict()), key=lambda e: (sum(e), e), reverse=True)
    for i in range(len(exps)):
        for j in range(i + 1, len(exps)):
            a11, a12 = b1.coefficient(exps[i]), b2.coefficient(exps[i])
            a21, a22 = b1.coefficient(exps[j]), b2.coefficient(exps[j])
            det = a11 * a22 - a12 * a21
            if det:
                r1, r2 = f.coefficient(exps[i]), f.coefficient(exps[j])
                a = (r1 * a22 - a12 * r2) / det
                b = (a11 * r2 - a21 * r1) / det
                return (a, b) if b1 * a + b2 * b == f else None
    return None


# ---------------------------------------------------------------------------
# the discriminant quartic (tangent developable of the twisted cubic)


def binary_cubic_discriminant_form():
    a0, a1, a2, a3 = U_RING.gens
    return (
        a1 * a1 * a2 * a2
        - a0 * a2 ** 3 * 4
        - a1 ** 3 * a3 * 4
        + a0 * a1 * a2 * a3 * 18
        - a0 * a0 * a3 * a3 * 27
    )


@dataclass(frozen=True)
class DiscriminantReport:
    form: MultiPoly
    invariant: bool
    reynolds_fixed: bool
    in_pencil: bool
    gradient_vanishes_on_cubic: bool
    hessian_rank_at_cube: int

    @property
    def ok(self):
        return (
            self.invariant
            and self.reynolds_fixed
            and self.in_pencil
            and self.gradient_vanishes_on_cubic
            and self.hessian_rank_at_cube == 1
        )


def binary_cubic_discriminant():
    D = binary_cubic_discriminant_form()
    mats = model_images("U4")
    gens = [sym_power_matrix(g, 3) for g in u2_matrices()]
    invariant = all(act_on_poly(g, D) == D for g in gens)
    # Reynolds projection of D, by linearity over its monomials
    monos, avgs = reynolds_average(mats, U_RING, 4)
    image = dict(zip(monos, avgs))
    proj = U_RING.zero()
    for e, c in D.as_dict().items():
        proj = proj + image[e] * c
    reynolds_fixed = proj == D
    basis = invariant_space("U4", 4).basis
    rows = [[f.coefficient(m) for m in monos] for f in (*basis, D)]
    in_pencil = matrix_rank(rows) == len(basis)

    # perfect cubes (a t + b s)^3 have coordinates (a^3, 3a^2 b, 3a b^2, b^3)
    from .polyalg.poly import PolyRing

    AB = PolyRing("a b")
    a, b = AB.gens
    cube = [a ** 3, a * a * b * 3, a * b * b * 3, b ** 3]
    grad_zero = all(g.compose(cube, AB).is_zero() for g in D.gradient())
    # chart u0 = 1 at (1, 0, 0, 0)
    pt = [1, 0, 0, 0]
    H = [[D.diff(i).diff(j).eval(pt) for j in (1, 2, 3)] for i in (1, 2, 3)]
    return DiscriminantReport(D, invariant, reynolds_fixed, in_pencil, grad_zero, matrix_rank(H))


def point_str(p: ProjPoint):
    return str(p)
