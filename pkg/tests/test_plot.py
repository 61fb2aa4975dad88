import math
import xml.etree.ElementTree as ET

import pytest

from newtonstrata import affine as aw
from newtonstrata import plot

from conftest import datum, elt

SVG = "{http://www.w3.org/2000/svg}"


def polygons(svg):
    root = ET.fromstring(svg)
    return root, root.findall(SVG + "polygon")


def test_rank_one_strip(sl2):
    root, polys = polygons(plot.plot_apartment(plot.PlotSpec(sl2, radius=3)))
    assert root.get("viewBox") == "0 0 512 512"
    assert len(polys) == len(aw.elements_up_to(sl2, 3)) == 7
    base = [p for p in polys if "base" in p.get("class")]
    assert len(base) == 1 and base[0].get("fill") == plot.BASE_FILL


def test_identity_highlights_base(sl3):
    svg = plot.plot_apartment(plot.PlotSpec(sl3, radius=2, highlight=[aw.identity(sl3)]))
    _, polys = polygons(svg)
    hot = [p for p in polys if p.get("fill") == plot.HIGHLIGHT_FILL]
    assert len(hot) == 1 and "base" in hot[0].get("class")
    assert plot.same_alcove(sl3, aw.identity(sl3), aw.identity(sl3))


def test_highlight_outside_window_is_added(sl3):
    x = elt(sl3, "t[-2,0,2]*s1*s2*s1")
    _, polys = polygons(plot.plot_apartment(plot.PlotSpec(sl3, radius=1, highlight=[x])))
    hot = [p for p in polys if p.get("fill") == plot.HIGHLIGHT_FILL]
    assert len(polys) == 5 and len(hot) == 1 and hot[0].get("data-length") == str(aw.length(sl3, x))


def test_shading(sl3):
    _, polys = polygons(plot.plot_apartment(plot.PlotSpec(sl3, radius=4, shade_shrunken=True)))
    shaded = [p for p in polys if p.get("fill") == plot.SHRUNKEN_FILL]
    expected = [x for x in aw.elements_up_to(sl3, 4) if aw.is_shrunken(sl3, x)]
    assert len(shaded) == len(expected) > 0


def test_rank_too_large():
    with pytest.raises(plot.RankTooLarge):
        plot.plot_apartment(plot.PlotSpec(datum("GL:4")))


@pytest.mark.parametrize("spec", ["SL:2", "SL:3", "GL:3", "SP:4"])
def test_gallery_distance_equals_length(spec):
    G = datum(spec)
    R = 6
    dist = plot.gallery_distances(G, R)
    inside = [x for x in aw.elements_up_to(G, R) if aw.length(G, x) < R]
    for x in inside:
        assert dist[x] == aw.length(G, x)


def test_length_three_alcove_distance(sl3):
    x = elt(sl3, "s1*s2*s0")
    assert aw.length(sl3, x) == 3
    assert plot.gallery_distances(sl3, 4)[x] == 3


def test_alcove_vertices_match_offsets(sl3):
    # off(x, a) is the ceiling of a over the closed alcove x a
    for x in aw.elements_up_to(sl3, 4):
        verts = plot.alcove(sl3, x)
        for k, a in enumerate(sl3.roots):
            sup = max(sum(c * v for c, v in zip(a, p)) for p in verts)
            assert math.ceil(sup) == aw.offset(sl3, x, k)
