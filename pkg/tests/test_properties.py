from hypothesis import given, settings
from hypothesis import strategies as st

import props
from icosa.numfield import SQRT5, ZETA5, sqrt5_in_zeta5


@settings(max_examples=300)
@given(props.ext_elems(SQRT5), props.ext_elems(SQRT5), props.ext_elems(SQRT5))
def test_field_axioms_sqrt5(a, b, c):
    assert props.field_axioms(a, b, c)


@settings(max_examples=300)
@given(props.ext_elems(ZETA5), props.ext_elems(ZETA5), props.ext_elems(ZETA5))
def test_field_axioms_zeta5(a, b, c):
    assert props.field_axioms(a, b, c)


@given(props.ext_elems(ZETA5), props.ext_elems(ZETA5))
def test_ext_canonical(a, b):
    assert props.ext_canonical(a, b)


def test_sqrt5_embedding():
    s = sqrt5_in_zeta5()
    assert s * s == 5


@given(st.sampled_from([2, 3, 5, 7, 101]), st.integers(), st.integers())
def test_prime_field(p, x, y):
    assert props.prime_field_axioms(p, x, y)


@given(props.polys())
def test_canonical_cancel(f):
    assert props.canonical_cancel(f)


@settings(max_examples=300)
@given(props.polys(max_terms=7))
def test_render_round_trip(f):
    assert props.render_round_trip(f)


@settings(max_examples=150)
@given(props.univariate_in_x(), props.univariate_in_x(2), props.univariate_in_x(2))
def test_resultant_multiplicative(f, g, h):
    assert props.resultant_multiplicative(f, g, h)


@settings(max_examples=200)
@given(st.integers(0, 5).flatmap(lambda d: st.tuples(props.polys(homogeneous=d), st.just(d))))
def test_euler_identity(fd):
    f, d = fd
    assert props.euler_identity(f, d)


@settings(max_examples=300)
@given(props.planted_rank())
def test_planted_rank(Mr):
    assert props.rank_recovered(*Mr)


@settings(max_examples=200)
@given(props.polys(), props.polys(max_degree=2, max_terms=3), props.polys(max_degree=2, max_terms=3),
       st.tuples(props.rationals, props.rationals, props.rationals))
def test_eval_subs(f, g, h, point):
    assert props.eval_subs(f, g, h, list(point))


@settings(max_examples=30)
@given(props.rationals)
def test_pencil_invariant(lam):
    assert props.pencil_invariant(lam)


@settings(max_examples=40)
@given(props.w4_rational_points)
def test_lambda_on_orbit(p):
    assert props.lambda_on_orbit(p)


@given(st.lists(props.rationals, min_size=4, max_size=4), props.rationals)
def test_projective_scaling(coords, c):
    assert props.projective_scaling(coords, c)


@settings(max_examples=4)
@given(props.invertible_3x3(), st.sampled_from([0, 1, 2]))
def test_nine_nodes_chart_independent(M, chart):
    assert props.nine_nodes_after_change(M, chart)
