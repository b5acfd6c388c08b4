from fractions import Fraction

import pytest
from sympy.combinatorics.named_groups import AlternatingGroup

from icosa.errors import (
    ClosureBoundExceeded,
    InvalidInput,
    NonIsolatedFixedLocus,
    SingularGenerator,
    UnsupportedPower,
)
from icosa.grouprep import (
    MODEL_NAMES,
    Character,
    a5_permutation_group,
    act_on_poly,
    binary_icosahedral,
    character_of,
    character_table_2a5,
    common_eigenvectors,
    conjugacy_classes,
    decompose,
    element_order,
    evaluate_word,
    generate_group,
    identity,
    inner_product,
    invariant_dim_by_characters,
    invariant_dim_by_reynolds,
    is_invariant,
    mat_neg,
    model_images,
    model_ring,
    reynolds_invariant_basis,
    sym_power_char,
    sym_power_matrix,
    trace,
    trivial_character,
    u2_matrices,
    u4_matrices,
    w4_matrices,
)
from icosa.hashimoto import power_sum_form
from icosa.numfield import ZETA5


def test_a5_closure_and_classes():
    G = generate_group(w4_matrices())
    assert G.order == 60
    sizes = sorted(c.size for c in conjugacy_classes(G))
    # independent oracle: permutation-group class sizes
    ref = sorted(len(c) for c in AlternatingGroup(5).conjugacy_classes())
    assert sizes == ref == [1, 12, 12, 15, 20]
    assert a5_permutation_group().order == 60


def test_binary_icosahedral_closure():
    G = binary_icosahedral()
    assert G.order == 120
    assert generate_group(u2_matrices()).order == 120
    minus = mat_neg(identity(2))
    assert minus in set(G.elements)
    assert [element_order(g) for g in u2_matrices()] == [10, 4]
    assert len(conjugacy_classes(G)) == 9


def test_trivial_group():
    G = generate_group([identity(3)])
    assert G.order == 1
    assert len(conjugacy_classes(G)) == 1


def test_generate_group_errors():
    with pytest.raises(SingularGenerator):
        generate_group([((1, 0), (0, 0))])
    with pytest.raises(ClosureBoundExceeded):
        generate_group([((2, 0), (0, 1))], bound=50)


def test_class_equation_and_power_maps():
    G = binary_icosahedral()
    classes = G.classes()
    assert sum(c.size for c in classes) == 120
    for i, c in enumerate(classes):
        assert c.power_map[1] == i


def test_u4_central_element():
    minus = mat_neg(identity(2))
    assert trace(sym_power_matrix(minus, 3)) == -4
    assert trace(identity(4)) == 4
    assert len(u4_matrices()) == 2


def test_character_table_orthonormal():
    table = character_table_2a5()
    names = list(table)
    assert sum(table[n].values[0] ** 2 for n in names) == 120
    for a in names:
        for b in names:
            assert inner_product(table[a], table[b]) == (1 if a == b else 0)


def test_character_table_dimensions():
    table = character_table_2a5()
    dims = {n: chi.values[0] for n, chi in table.items()}
    assert dims == {"I": 1, "U2": 2, "U2'": 2, "W3": 3, "W3'": 3, "W4": 4, "U4": 4, "W5": 5, "U6": 6}


def test_inner_product_examples():
    table = character_table_2a5()
    assert inner_product(table["W4"], table["W4"]) == 1
    assert inner_product(table["W3"], table["W3'"]) == 0
    triv = trivial_character(binary_icosahedral())
    assert inner_product(triv, triv) == 1


def test_sym_power_char_examples():
    table = character_table_2a5()
    d = decompose(sym_power_char(table["U4"], 2), table)
    assert {k: v for k, v in d.items() if v} == {"W3": 1, "W3'": 1, "W4": 1}
    assert inner_product(sym_power_char(table["W4"], 4), table["I"]) == 2
    triv = table["I"]
    assert sym_power_char(triv, 2).values == triv.values
    with pytest.raises(UnsupportedPower):
        sym_power_char(triv, 5)


def test_sym_power_char_matches_matrices():
    # Newton formulas against traces of explicit symmetric-power matrices
    G = binary_icosahedral()
    chi = character_of(G)
    for k in (2, 3, 4):
        direct = character_of(G, lambda g, k=k: sym_power_matrix(g, k))
        assert sym_power_char(chi, k).values == direct.values


def test_character_arithmetic():
    table = character_table_2a5()
    s = table["W3"] + table["W3'"]
    assert isinstance(s, Character)
    assert inner_product(s, table["W3"]) == 1
    assert inner_product(table["U2"] * table["U2"], table["I"]) == 1


def test_reynolds_w4():
    mats = model_images("W4")
    ring = model_ring("W4")
    b2 = reynolds_invariant_basis(mats, ring, 2)
    assert len(b2) == 1
    F2 = power_sum_form(2)
    assert b2[0] * F2.leading_coefficient() == F2
    b4 = reynolds_invariant_basis(mats, ring, 4)
    assert len(b4) == 2
    for f in b4:
        assert is_invariant(f, w4_matrices())
    assert is_invariant(power_sum_form(4), w4_matrices())
    assert act_on_poly(w4_matrices()[0], F2) == F2


@pytest.mark.parametrize(
    "model,degree,expected",
    [
        ("W4", 2, 1),
        ("W4", 4, 2),
        ("U4", 2, 0),
        ("U4", 4, 2),
        ("U2+U2", 2, 1),
        ("U2+U2", 4, 1),
        ("U2+U2'", 4, 0),
        ("I+W3", 2, 2),
        ("I+W3", 4, 3),
    ],
)
def test_invariant_dims_two_ways(model, degree, expected):
    assert invariant_dim_by_characters(model, degree) == expected
    assert invariant_dim_by_reynolds(model, degree) == expected


def test_models_listed():
    assert MODEL_NAMES == ("W4", "U4", "U2+U2", "U2+U2'", "I+W3")


def test_common_eigenvectors_five_cycle():
    g = w4_matrices()[0]
    pts = common_eigenvectors([g], ZETA5)
    assert len(pts) == 4
    for p in pts:
        assert p.transform(g) == p
    z = ZETA5.gen
    assert any(p.coords == (1, z, z ** 2, z ** 3) for p in pts)


def test_common_eigenvectors_contract():
    with pytest.raises(InvalidInput):
        common_eigenvectors([identity(4)])
    # a permutation with a repeated eigenvalue has a positive-dimensional fixed locus
    swap = ((0, 1, 0), (1, 0, 0), (0, 0, 1))
    with pytest.raises(NonIsolatedFixedLocus):
        common_eigenvectors([swap])


def test_evaluate_word():
    S, T = u2_matrices()
    assert evaluate_word("ST", (S, T)) == tuple(
        tuple(sum(S[i][k] * T[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )
    assert evaluate_word("Ss", (S, T)) == identity(2)
