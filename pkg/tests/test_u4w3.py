import pytest
import sympy

from icosa.conicbundle import equal_up_to_scalar
from icosa.errors import InvalidInput
from icosa.grouprep import is_invariant, model_images
from icosa.u4w3 import (
    SUBGROUPS,
    binary_cubic_discriminant,
    binary_cubic_discriminant_form,
    fixed_point_census,
    invariant_dim,
    invariant_space,
    subgroup,
    subgroup_elements,
    sym2_u4_decompose,
    u4_generators_z20,
    u4_pencil_nodal_members,
)


@pytest.fixture(scope="module")
def pencil():
    return u4_pencil_nodal_members()


def test_subgroup_orders():
    for spec in SUBGROUPS:
        assert subgroup_elements(spec).order == spec.order
    with pytest.raises(InvalidInput):
        subgroup("2.S4")


@pytest.mark.parametrize(
    "model,degree,expected",
    [("U2+U2'", 4, 0), ("U2+U2", 2, 1), ("U2+U2", 4, 1), ("U4", 4, 2), ("W4", 4, 2), ("I+W3", 2, 2), ("I+W3", 4, 3)],
)
def test_invariant_dim(model, degree, expected):
    rec = invariant_space(model, degree)
    assert rec.by_characters == rec.by_reynolds == expected
    assert invariant_dim(model, degree) == expected
    for f in rec.basis:
        assert is_invariant(f, model_images(model))


def test_invariant_dim_bad_input():
    with pytest.raises(InvalidInput):
        invariant_dim("W5", 2)
    with pytest.raises(InvalidInput):
        invariant_dim("W4", 5)


def test_u2u2_quartic_is_square():
    (q,) = invariant_space("U2+U2", 2).basis
    (f,) = invariant_space("U2+U2", 4).basis
    assert equal_up_to_scalar(f, q * q) is not None


def test_sym2_u4():
    d = {k: v for k, v in sym2_u4_decompose().items() if v}
    assert d == {"W3": 1, "W3'": 1, "W4": 1}
    assert 3 + 3 + 4 == 10
    assert sym2_u4_decompose().get("I", 0) == 0


@pytest.mark.parametrize("name", ["2.A4", "2.D10", "quaternion-8"])
def test_census_empty(name):
    rep = fixed_point_census(name)
    assert rep.fixed_points == ()
    assert rep.complete


def test_census_dicyclic():
    rep = fixed_point_census("dicyclic-12")
    assert len(rep.fixed_points) == 2
    assert rep.orbit_lengths == (10, 10)
    assert rep.distinct_orbits == 2
    assert rep.complete
    for length, stab in zip(rep.orbit_lengths, rep.stabilizer_orders):
        assert length * stab == 60
    gens = [m for m in subgroup_elements(subgroup("dicyclic-12")).generators]
    from icosa.u4w3 import _u4_z20

    for p in rep.fixed_points:
        for g in gens:
            assert p.transform(_u4_z20(g)) == p
    assert len(u4_generators_z20()) == 2


def test_nodal_members(pencil):
    assert len(pencil.members) == 2
    assert pencil.distinct
    for m in pencil.members:
        assert m.all_nodes and len(m.orbit) == 10
    assert pencil.generic_gradients_nonzero


def test_special_members_distinct(pencil):
    D = binary_cubic_discriminant_form()
    from icosa.u4w3 import _lift

    for m in pencil.members:
        assert equal_up_to_scalar(m.equation, _lift(D)) is None
    assert pencil.discriminant_coordinates is not None


def test_discriminant_certificates():
    rep = binary_cubic_discriminant()
    assert rep.invariant and rep.reynolds_fixed and rep.in_pencil
    assert rep.gradient_vanishes_on_cubic
    assert rep.hessian_rank_at_cube == 1
    assert rep.ok


def test_discriminant_matches_sympy():
    a0, a1, a2, a3, t = sympy.symbols("u0 u1 u2 u3 t")
    ref = sympy.discriminant(a0 * t ** 3 + a1 * t ** 2 + a2 * t + a3, t)
    ours = sympy.sympify(str(binary_cubic_discriminant_form()).replace("^", "**"))
    assert sympy.expand(ref - ours) == 0
