from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from newtonstrata.rootdatum import InvalidDatum, build_root_datum, datum_from_json

from conftest import datum


def test_gl2_basics():
    G = datum("GL:2")
    assert (G.d, G.n_pos) == (2, 1)
    assert G.pi1.moduli == (0,)


def test_sl2_has_trivial_pi1():
    G = datum("SL:2")
    assert G.pi1.moduli == ()
    assert G.pi1_class((3, -3)).is_zero()


def test_gl4_sizes():
    G = datum("GL:4")
    assert G.n_pos == 6 and G.weyl_order == 24


def test_act_examples():
    G = datum("GL:2")
    assert G.act(G.s(0), (1, 0)) == (0, 1)
    assert G.act(G.identity_w, (3, 5)) == (3, 5)
    G4 = datum("GL:4")
    assert G4.act(G4.from_word([0, 1, 2, 1, 0]), (1, 0, 1, 0)) == (0, 0, 1, 1)


def test_dominant_rep():
    G = datum("GL:2")
    dom, v = G.dominant_rep((0, 1))
    assert dom == (1, 0) and v == G.s(0)
    assert G.dominant_rep((1, 0))[1] == G.identity_w
    assert G.dominant_rep((Q(1, 2), Q(1, 2)))[0] == (Q(1, 2), Q(1, 2))


def test_coroot_cone_coeffs():
    G = datum("GL:2")
    assert G.coroot_cone_coeffs((1, -1)) == (1,)
    assert G.coroot_cone_coeffs((Q(1, 2), Q(-1, 2))) == (Q(1, 2),)
    assert G.coroot_cone_coeffs((1, 1)) is None


def test_pi1_classes():
    assert datum("GL:2").pi1_class((1, 0)).coords == (1,)
    assert datum("GL:4").pi1_class((0, 0, 1, 1)).coords == (2,)


def test_delta_stable_subsets():
    assert datum("SL:2").delta_stable_subsets() == [frozenset(), frozenset({0})]
    assert len(datum("GL:4").delta_stable_subsets()) == 8
    assert datum("SL:3", "flip").delta_stable_subsets() == [frozenset(), frozenset({0, 1})]


def test_rho_pairs_to_one_with_simple_coroots():
    for spec in ("GL:3", "SL:4", "SP:4", "SP:6"):
        G = datum(spec)
        for c in G.simple_coroots:
            assert sum(r * x for r, x in zip(G.rho, c)) == 1


def test_invalid_cartan_rejected():
    with pytest.raises(InvalidDatum):
        # <a1, a2^vee> = -3 and <a2, a1^vee> = -3 is not of finite type
        build_root_datum({"ambient_rank": 2, "simple_roots": [[2, 0], [-3, 2]],
                          "simple_coroots": [[1, 0], [-3, 2]]})
    with pytest.raises(InvalidDatum):
        build_root_datum("XX:3")


def test_json_round_trip():
    G = datum("GL:3", "flip")
    H = datum_from_json(G.to_json())
    assert H.simple_roots == G.simple_roots and H.delta_perm == G.delta_perm


def test_shorthand_json():
    G = build_root_datum({"type": "GL", "rank": 3})
    assert G.d == 3 and G.n_pos == 3


vec3 = st.tuples(*[st.integers(-6, 6)] * 3)


@settings(max_examples=200, deadline=None)
@given(vec3, vec3)
def test_pi1_additive(a, b):
    G = datum("GL:3", "flip")
    s = tuple(x + y for x, y in zip(a, b))
    assert G.pi1_class(s) == G.pi1_class(a) + G.pi1_class(b)


@settings(max_examples=200, deadline=None)
@given(vec3, st.integers(0, 5))
def test_dominant_rep_is_orbit_invariant(x, k):
    G = datum("GL:3")
    w = G.W[k]
    dom = G.dominant_rep(x)[0]
    assert G.dominant_rep(G.act(w, x))[0] == dom
    assert G.dominant_rep(dom)[0] == dom


@settings(max_examples=100, deadline=None)
@given(vec3)
def test_delta_commutes_with_dominance(x):
    G = datum("GL:3", "flip")
    assert G.dominant_rep(G.delta_vec(x))[0] == G.delta_vec(G.dominant_rep(x)[0])
