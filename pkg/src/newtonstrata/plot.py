"""SVG pictures of the apartment for semisimple rank at most two.

Points of the apartment live in the span of the coroots. The element
``t^lam v`` acts by ``p -> v p - lam``; with this action
``off(x, alpha)`` is the ceiling of ``alpha`` over ``x a`` and the base
alcove ``a`` is ``{0 < alpha(p) < 1 for alpha > 0}``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence
from xml.sax.saxutils import escape

from . import affine as aw
from . import lattice as la
from .affine import AffineWeylElt
from .rootdatum import RootDatum

VIEW = 512
MARGIN = 16

# fill colors, documented in the README
BASE_FILL = "#f4c542"
HIGHLIGHT_FILL = "#d9534f"
SHRUNKEN_FILL = "#cfe3f7"
PLAIN_FILL = "#ffffff"
WALL_STROKE = "#555555"


class RankTooLarge(ValueError):
    """Only semisimple rank 1 and 2 can be drawn."""


@dataclass
class PlotSpec:
    datum: RootDatum
    radius: int = 2
    highlight: list = field(default_factory=list)
    shade_shrunken: bool = False


def _constraints(G: RootDatum) -> list:
    """``(root vector, bound, sign)``: base alcove is ``sign * (<root, p> - bound) <= 0``."""
    out = [(G.simple_roots[i], 0, -1) for i in range(G.n_simple)]
    for comp in aw.components(G):
        theta = max((k for k in range(G.n_pos)
                     if all(G.root_coeffs[k][j] == 0 for j in range(G.n_simple) if j not in comp)),
                    key=lambda k: sum(G.root_coeffs[k]))
        out.append((G.roots[theta], 1, 1))
    return out


def base_vertices(G: RootDatum) -> list:
    """Vertices of the base alcove as exact points of the ambient space."""
    r = G.n_simple
    B = la.transpose([list(c) for c in G.simple_coroots])  # d x r
    cons = _constraints(G)
    # rows of <root, B y>
    rows = [[la.dot(a, [B[t][j] for t in range(G.d)]) for j in range(r)] for a, _, _ in cons]
    verts = []
    for pick in combinations(range(len(cons)), r):
        A = [rows[i] for i in pick]
        if la.rank(A) < r:
            continue
        Ai = la.inverse(A)
        y = la.matvec(Ai, [Fraction(cons[i][1]) for i in pick])
        ok = all(s * (la.dot(row, y) - b) <= 0 for row, (_, b, s) in zip(rows, cons))
        if ok:
            p = tuple(la.matvec(B, y))
            if p not in verts:
                verts.append(p)
    return verts


def act_point(G: RootDatum, x: AffineWeylElt, p: Sequence) -> tuple:
    vp = la.matvec(x.v.matrix, p)
    lam = project(G, x.lam)
    return tuple(a - b for a, b in zip(vp, lam))


def project(G: RootDatum, lam: Sequence) -> tuple:
    """Component of ``lam`` in the coroot span (kills the central part)."""
    c = G.central_projection(lam)
    return tuple(Fraction(a) - b for a, b in zip(lam, c))


def alcove(G: RootDatum, x: AffineWeylElt) -> list:
    return [act_point(G, x, p) for p in base_vertices(G)]


def alcoves_within(G: RootDatum, radius: int) -> list:
    """Affine Weyl group elements of length at most ``radius``."""
    return aw.elements_up_to(G, radius)


def gallery_distances(G: RootDatum, radius: int) -> dict:
    """Breadth-first distance from the base alcove, using only shared walls.

    Two alcoves are adjacent when they share ``rank`` vertices (a wall).
    Alcoves beyond ``radius`` are not drawn, and distances to elements of
    length ``radius`` can only be shorter in the full tiling, so callers
    compare against ``length`` for elements strictly inside the window.
    """
    xs = alcoves_within(G, radius)
    verts = {x: frozenset(alcove(G, x)) for x in xs}
    by_vertex: dict = {}
    for x, vs in verts.items():
        for v in vs:
            by_vertex.setdefault(v, []).append(x)
    e = aw.identity(G)
    dist = {e: 0}
    queue = deque([e])
    r = G.n_simple
    while queue:
        x = queue.popleft()
        cand = {y for v in verts[x] for y in by_vertex[v]}
        for y in cand:
            if y not in dist and len(verts[x] & verts[y]) == r:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


# ----------------------------------------------------------------------
# drawing


def _plane_basis(G: RootDatum) -> list:
    """Orthonormal basis (floats) of the coroot span, by Gram-Schmidt."""
    basis = []
    for c in G.simple_coroots:
        v = [float(t) for t in c]
        for b in basis:
            d = sum(x * y for x, y in zip(v, b))
            v = [x - d * y for x, y in zip(v, b)]
        n = math.sqrt(sum(x * x for x in v))
        if n > 1e-12:
            basis.append([x / n for x in v])
    return basis


def _to_plane(basis, p) -> tuple:
    u = sum(float(a) * b for a, b in zip(p, basis[0]))
    w = sum(float(a) * b for a, b in zip(p, basis[1])) if len(basis) > 1 else 0.0
    return u, w


def _order_ring(pts: list) -> list:
    cx = sum(p[0] for p in pts) / len(pts)
    cy = sum(p[1] for p in pts) / len(pts)
    return sorted(pts, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))


def plot_apartment(spec: PlotSpec) -> str:
    G = spec.datum
    if G.n_simple > 2 or G.n_simple == 0:
        raise RankTooLarge("semisimple rank %d cannot be plotted" % G.n_simple)
    basis = _plane_basis(G)
    xs = alcoves_within(G, spec.radius)
    drawn = {frozenset(alcove(G, x)) for x in xs}
    marked = {frozenset(alcove(G, h)) for h in spec.highlight}
    extra = [h for h in spec.highlight if frozenset(alcove(G, h)) not in drawn]
    shapes = []
    for x in list(xs) + extra:
        pts = [_to_plane(basis, p) for p in alcove(G, x)]
        shapes.append((x, pts))
    allp = [p for _, pts in shapes for p in pts]
    lo_u, hi_u = min(p[0] for p in allp), max(p[0] for p in allp)
    lo_w, hi_w = min(p[1] for p in allp), max(p[1] for p in allp)
    if G.n_simple == 1:
        lo_w, hi_w = -0.25, 0.25
    span = max(hi_u - lo_u, hi_w - lo_w) or 1.0
    scale = (VIEW - 2 * MARGIN) / span
    cu, cw = (lo_u + hi_u) / 2, (lo_w + hi_w) / 2

    def px(p):
        return (VIEW / 2 + (p[0] - cu) * scale, VIEW / 2 - (p[1] - cw) * scale)

    out = ['<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 %d %d" width="%d" height="%d">'
           % (VIEW, VIEW, VIEW, VIEW),
           '<title>%s apartment, radius %d</title>' % (escape(G.name or "datum"), spec.radius)]
    e = aw.identity(G)
    for x, pts in shapes:
        fill = PLAIN_FILL
        if spec.shade_shrunken and aw.is_shrunken(G, x):
            fill = SHRUNKEN_FILL
        if x == e:
            fill = BASE_FILL
        if frozenset(alcove(G, x)) in marked:
            fill = HIGHLIGHT_FILL
        cls = "alcove base" if x == e else "alcove"
        if G.n_simple == 1:
            (a, _), (b, _) = sorted(pts)
            pts = [(a, -0.25), (b, -0.25), (b, 0.25), (a, 0.25)]
        else:
            pts = _order_ring(pts)
        coords = " ".join("%.2f,%.2f" % px(p) for p in pts)
        out.append('<polygon class="%s" data-length="%d" points="%s" fill="%s" stroke="%s" stroke-width="1"/>'
                   % (cls, aw.length(G, x), coords, fill, WALL_STROKE))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def same_alcove(G: RootDatum, x: AffineWeylElt, y: AffineWeylElt) -> bool:
    return frozenset(alcove(G, x)) == frozenset(alcove(G, y))
