"""Brute-force ``B(G)_x`` and ``dim X_x(b)`` by Deligne-Lusztig reduction.

For ``x`` of minimal length in its delta-conjugacy class the answer is the
single class of ``x`` with dimension ``l(x) - <2 rho, nu_x>``. Otherwise a
length-preserving cyclic shift reaches ``y`` with ``l(s y delta(s)) =
l(y) - 2``, and the result for ``y`` is the per-class maximum of the
results for ``s y delta(s)`` and ``s y``, each shifted by one.

Absent classes are simply missing from the result dict.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import affine as aw
from . import alcove as al
from . import sigma as sg
from .affine import AffineWeylElt
from .rootdatum import RootDatum

EMPTY = None


def pair_two_rho(G: RootDatum, nu) -> Fraction:
    return sum((r * Fraction(n) for r, n in zip(G.two_rho, nu)), Fraction(0))


class Reducer:
    """Memoized reduction engine for one datum (any level)."""

    def __init__(self, G: RootDatum, budget: int = aw.DEFAULT_BUDGET):
        self.G = G
        self.budget = budget
        self.memo: dict = {}

    def __call__(self, x: AffineWeylElt) -> dict:
        G = self.G
        hit = self.memo.get(x)
        if hit is not None:
            return hit
        seen, move = aw.shift_component(G, x, self.budget)
        if move is None:
            b = sg.class_of(x, G)
            d = aw.length(G, x) - pair_two_rho(G, b.nu)
            res = {b: int(d)}
        else:
            y, i = move
            s = aw.affine_simple_reflections(G)[i][1]
            res = {}
            for child in (aw.cyclic_shift(G, s, y), aw.mul(G, s, y)):
                for b, d in self(child).items():
                    if res.get(b, -1) < d + 1:
                        res[b] = d + 1
        for z in seen:
            self.memo[z] = res
        return res


_reducers: dict = {}


def reducer(G: RootDatum, budget: int = aw.DEFAULT_BUDGET) -> Reducer:
    r = _reducers.get((id(G), budget))
    if r is None or r.G is not G:
        r = _reducers[(id(G), budget)] = Reducer(G, budget)
    return r


def reduce(G: RootDatum, x: AffineWeylElt, budget: int = aw.DEFAULT_BUDGET) -> dict:
    """Map each class of ``B(G)_x`` to ``dim X_x(b)``."""
    return dict(reducer(G, budget)(x))


def dim_adlv(G: RootDatum, x: AffineWeylElt, b: sg.SigmaClass, budget: int = aw.DEFAULT_BUDGET):
    """``dim X_x(b)``, or :data:`EMPTY` when ``b`` misses ``IxI``."""
    return reduce(G, x, budget).get(b, EMPTY)


# ----------------------------------------------------------------------
# tables


@dataclass
class StrataRow:
    cls: sg.SigmaClass
    dim: int
    vdim: Fraction
    delta: Fraction
    codim: int

    def to_json(self) -> dict:
        return {"class": self.cls.to_json(), "dim": self.dim, "vdim": sg.fmt_q(self.vdim),
                "delta": sg.fmt_q(self.delta), "codim": self.codim}


@dataclass
class StrataTable:
    x: AffineWeylElt
    datum: RootDatum
    rows: list
    has_unique_min: bool
    saturated: bool
    cordial_candidate: bool
    gaps: list = field(default_factory=list)
    equidimensional: str = "unknown"

    def to_json(self) -> dict:
        from .parse import format_element
        return {"x": format_element(self.datum, self.x),
                "length": aw.length(self.datum, self.x),
                "rows": [r.to_json() for r in self.rows],
                "flags": {"has_unique_min": self.has_unique_min, "saturated": self.saturated,
                          "cordial_candidate": self.cordial_candidate,
                          "equidimensional": self.equidimensional},
                "gaps": [g.to_json() for g in self.gaps]}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["class_nu", "class_kappa", "dim", "vdim", "delta", "codim"])
        for r in self.rows:
            w.writerow([" ".join(sg.fmt_q(c) for c in r.cls.nu),
                        " ".join(str(c) for c in r.cls.kappa.coords),
                        r.dim, sg.fmt_q(r.vdim), sg.fmt_q(r.delta), r.codim])
        return buf.getvalue()

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def order_key(G: RootDatum, b: sg.SigmaClass) -> tuple:
    # <2 rho, .> strictly increases along the order, so this is topological
    return (pair_two_rho(G, b.nu),) + b.sort_key()


def strata_table(G: RootDatum, x: AffineWeylElt, budget: int = aw.DEFAULT_BUDGET) -> StrataTable:
    res = reduce(G, x, budget)
    lx = aw.length(G, x)
    rows = []
    for b in sorted(res, key=lambda c: order_key(G, c)):
        vd = al.virtual_dimension(G, x, b, budget)
        dim = res[b]
        rows.append(StrataRow(b, dim, vd, vd - dim, int(lx - pair_two_rho(G, b.nu) - dim)))
    mins = sg.minimal_classes(res)
    maxs = sg.maximal_classes(res)
    gaps = []
    if len(mins) == 1 and len(maxs) == 1:
        m, top = mins[0], maxs[0]
        for c in sg.enumerate_segment(G, top.kappa, top.nu):
            if c not in res and sg.lt(m, c) and sg.lt(c, top):
                gaps.append(c)
    cordial = False
    if len(maxs) == 1:
        cordial = next(r for r in rows if r.cls == maxs[0]).delta == 0
    return StrataTable(x, G, rows, len(mins) == 1, not gaps, cordial, gaps)


# ----------------------------------------------------------------------
# sweeps


def sweep_elements(G: RootDatum, max_len: int) -> list:
    """All ``x`` with ``l(x) <= max_len``, one Omega-representative per Kottwitz class."""
    return aw.elements_up_to(G, max_len, aw.omega_representatives(G))


def gap_search(G: RootDatum, max_len: int, budget: int = aw.DEFAULT_BUDGET) -> list:
    """Elements up to length ``max_len`` whose ``B(G)_x`` has a gap."""
    out = []
    for x in sweep_elements(G, max_len):
        if not strata_table(G, x, budget).saturated:
            out.append(x)
    return out
