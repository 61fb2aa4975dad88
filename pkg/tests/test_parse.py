import random

import pytest
from hypothesis import given, settings, strategies as st

from newtonstrata import affine as aw
from newtonstrata.parse import DimensionMismatch, ParseError, format_element, parse_element

from conftest import datum


def test_examples(gl2, sl2):
    assert parse_element("t[1,0]*s1", gl2) == aw.make(gl2, (1, 0), [0])
    assert parse_element("s0*s1*s0", sl2) == aw.make(sl2, (-2, 2), [0])
    assert parse_element(" ( s1 * t[ 1 , 0 ] ) ^ 2 ", gl2) == aw.translation(gl2, (1, 1))
    assert parse_element("(t[1,0]*s1)^-1", gl2) == aw.inv(gl2, parse_element("t[1,0]*s1", gl2))
    assert parse_element("1", gl2) == aw.identity(gl2)


def test_error_positions(gl2):
    with pytest.raises(ParseError) as e:
        parse_element("t[1,0", gl2)
    assert e.value.pos == 5
    with pytest.raises(ParseError) as e:
        parse_element("s1*s7", gl2)
    assert e.value.pos == 3
    with pytest.raises(ParseError):
        parse_element("s1 s1", gl2)
    with pytest.raises(DimensionMismatch):
        parse_element("t[1,0,0]", gl2)
    with pytest.raises(DimensionMismatch):
        parse_element("t[1,0]", datum("SL:2"))


def test_several_affine_reflections():
    names = [n for n, _ in aw.affine_simple_reflections(datum("GL:4").levi([0, 2]))]
    assert names == ["s1", "s3", "s0_1", "s0_2"]
    M = datum("GL:4").levi([0, 2])
    assert parse_element("s0_2", M) == parse_element("t[0,0,-1,1]*s3", datum("GL:4"))


def gens_for(G):
    return [n for n, _ in aw.affine_simple_reflections(G)]


@pytest.mark.parametrize("spec,d", [("GL:2", None), ("SL:3", None), ("GL:3", "flip"),
                                    ("SP:4", None), ("GL:4", None)])
def test_round_trip_random(spec, d):
    G = datum(spec, d)
    rng = random.Random(17)
    gens = gens_for(G)
    for _ in range(1000 // 5):
        word = [rng.choice(gens) for _ in range(rng.randint(0, 10))]
        lam = [rng.randint(-3, 3) for _ in range(G.d)]
        text = "*".join(["t[%s]" % ",".join(map(str, lam))] + word) if G.in_lattice(lam) else \
            "*".join(word) or "1"
        x = parse_element(text, G)
        assert parse_element(format_element(G, x), G) == x


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=3, max_size=3), st.integers(0, 5))
def test_round_trip_hypothesis(lam, k):
    G = datum("GL:3")
    x = aw.AffineWeylElt(tuple(lam), G.W[k])
    s = format_element(G, x)
    assert parse_element(s, G) == x
    assert parse_element(s.replace("*", " * "), G) == x
