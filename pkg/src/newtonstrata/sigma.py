"""Sigma-conjugacy classes: Newton and Kottwitz points from representatives.

A class is stored as ``(nu, kappa)`` at some level (the whole datum or one
of its Levi subdata). Classes produced from an element remember that
element for reporting.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any, Optional, Sequence

from . import affine as aw
from . import lattice as la
from .affine import AffineWeylElt
from .rootdatum import Pi1Element, RootDatum

DENOMINATOR_CAP = 60


class NoRepresentative(ValueError):
    """The class has no Iwahori-Weyl representative attached."""


class DenominatorCapExceeded(ValueError):
    """A Newton point needed a denominator above the enumeration cap."""


@dataclass(frozen=True)
class SigmaClass:
    nu: tuple
    kappa: Pi1Element
    level: RootDatum
    representative: Optional[AffineWeylElt] = field(default=None, compare=False, hash=False)

    def level_json(self) -> Any:
        L = self.level
        return "G" if L.parent is None else [i + 1 for i in L.simple_indices()]

    def to_json(self) -> dict:
        return {"nu": [fmt_q(c) for c in self.nu], "kappa": list(self.kappa.coords),
                "level": self.level_json()}

    def sort_key(self) -> tuple:
        return (self.nu, self.kappa.coords)

    def __repr__(self) -> str:
        return "SigmaClass(nu=(%s), kappa=%s)" % (",".join(fmt_q(c) for c in self.nu),
                                                  list(self.kappa.coords))


def fmt_q(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)


def class_from_json(obj: dict, G: RootDatum) -> SigmaClass:
    lev = obj.get("level", "G")
    L = G if lev == "G" else G.levi([j - 1 for j in lev])
    k = tuple(int(c) for c in obj["kappa"])
    return SigmaClass(tuple(Fraction(c) for c in obj["nu"]), Pi1Element(k, L.pi1.moduli), L)


# ----------------------------------------------------------------------


def newton_point(y: AffineWeylElt, level: RootDatum) -> tuple:
    """Level-dominant Newton point of ``y``.

    Uses the smallest ``n`` such that ``y delta(y) ... delta^{n-1}(y)`` is a
    translation and ``delta^n = 1``; the second condition makes the average
    delta-invariant.
    """
    L = level
    m = L.delta_order
    cur = aw.identity(L)
    z = y
    n = 0
    limit = L.weyl_order * m + 1
    while True:
        cur = aw.mul(L, cur, z)
        z = aw.delta_of(L, z)
        n += 1
        if n % m == 0 and cur.v == L.identity_w:
            break
        if n > limit:  # pragma: no cover
            raise AssertionError("no translation power found for %r" % (y,))
    nu = tuple(Fraction(c, n) for c in cur.lam)
    return L.dominant_rep(nu)[0]


def antidominant(L: RootDatum, nu: Sequence) -> tuple:
    """The level-antidominant point of the W_L-orbit of ``nu``."""
    return tuple(-c for c in L.dominant_rep([-Fraction(c) for c in nu])[0])


def class_of(y: AffineWeylElt, level: RootDatum) -> SigmaClass:
    return SigmaClass(newton_point(y, level), level.pi1.classify(y.lam), level, y)


def leq(b: SigmaClass, c: SigmaClass) -> bool:
    """Partial order: same Kottwitz point, difference a non-negative coroot combination."""
    if b.level is not c.level:
        raise ValueError("classes live at different levels")
    if b.kappa != c.kappa:
        return False
    return nu_leq(b.level, b.nu, c.nu)


def nu_leq(L: RootDatum, nu: Sequence, nu2: Sequence) -> bool:
    diff = [Fraction(a) - Fraction(b) for a, b in zip(nu2, nu)]
    coeffs = L.coroot_cone_coeffs(diff)
    return coeffs is not None and all(c >= 0 for c in coeffs)


def lt(b: SigmaClass, c: SigmaClass) -> bool:
    return b != c and leq(b, c)


def is_basic(b: SigmaClass) -> bool:
    L = b.level
    return all(L.pair(k, b.nu) == 0 for k in range(L.n_pos))


def basic_class(k: Pi1Element, level: RootDatum) -> SigmaClass:
    L = level
    lam = L.pi1.lift(k)
    nu = L.delta_average(L.central_projection(lam))
    tau = aw.omega_part(L, aw.translation(L, lam))
    return SigmaClass(L.dominant_rep(nu)[0], k, L, tau)


def fixed_dim(L: RootDatum, v) -> int:
    """Dimension of the fixed space of ``v o delta`` on the cocharacter space."""
    vd = la.matmul(v.matrix, L.delta_matrix)
    m = [[vd[i][j] - int(i == j) for j in range(L.d)] for i in range(L.d)]
    return len(L.lattice_basis[0]) - la.rank(la.matmul(m, L.lattice_basis))


def twisted_corank(L: RootDatum, v) -> int:
    """``dim a^delta - dim a^{v delta}``: the split rank lost by twisting with ``v``."""
    return fixed_dim(L, L.identity_w) - fixed_dim(L, v)


def levi_basic_representative(level: RootDatum, nu: Sequence, kappa: Pi1Element) -> AffineWeylElt:
    """Length-zero element of the Levi centralizing ``nu`` lying in ``(nu, kappa)``.

    The Levi ``M`` is cut out by the simple roots vanishing on ``nu``; the
    element is basic in ``M`` with Newton point ``nu``.
    """
    L = level
    nu = tuple(Fraction(c) for c in nu)
    J = frozenset(i for i in range(L.n_simple) if la.dot(L.simple_roots[i], nu) == 0)
    M = L.levi(J)
    lam = list(L.pi1.lift(kappa))
    nu0 = M.delta_average(M.central_projection(lam))
    coeffs = L.coroot_cone_coeffs([a - b for a, b in zip(nu, nu0)])
    missing = NoRepresentative("no class with nu=%r and kappa=%r" % (nu, kappa))
    if coeffs is None:
        raise missing
    for i in range(L.n_simple):
        orb = _orbit(L, i)
        if i in J or i != orb[0]:
            continue
        n = coeffs[i] * len(orb)
        if n.denominator != 1:
            raise missing
        for c in range(L.d):
            lam[c] += int(n) * L.simple_coroots[i][c]
    if M.delta_average(M.central_projection(lam)) != nu:
        raise missing
    return aw.as_level(L, aw.omega_part(M, aw.translation(M, lam)))


def defect(b: SigmaClass) -> int:
    """Split rank of the level minus that of the twisted centralizer of ``b``."""
    y = levi_basic_representative(b.level, b.nu, b.kappa)
    return twisted_corank(b.level, y.v)


def defect_from_minimal(b: SigmaClass, budget: int = aw.DEFAULT_BUDGET) -> int:
    """Fixed-space formula on a minimal-length descent of the stored representative.

    Agrees with :func:`defect` when the descent lands on an element of
    length ``<2 rho, nu>``; kept for comparison.
    """
    if b.representative is None:
        raise NoRepresentative("class %r carries no representative" % (b,))
    L = b.level
    y = aw.minimal_representative(L, b.representative, budget)
    return twisted_corank(L, y.v)


def levi_transfer(b: SigmaClass) -> SigmaClass:
    L = b.level
    G = L.top
    if L is G:
        return b
    nu = G.dominant_rep(b.nu)[0]
    kappa = G.pi1.classify(L.pi1.lift(b.kappa))
    return SigmaClass(nu, kappa, G, b.representative)


def kappa_to_top(L: RootDatum, k: Pi1Element) -> Pi1Element:
    return L.top.pi1.classify(L.pi1.lift(k))


# ----------------------------------------------------------------------
# segments of B(G)


def enumerate_segment(G: RootDatum, kappa: Pi1Element, nu_max: Sequence,
                      cap: Optional[int] = DENOMINATOR_CAP) -> list:
    """All classes with Kottwitz point ``kappa`` and Newton point below ``nu_max``.

    Each class is the image of a basic class of the Levi given by its
    centralizer type ``J``; the Kottwitz points of that Levi above ``kappa``
    are swept through lifts ``lam0 + sum N_O alpha^vee_O`` over delta-orbits
    ``O`` outside ``J``, with ``N_O`` bounded by the coroot coefficients of
    ``nu_max - nu_basic``.
    """
    nu_max = tuple(Fraction(c) for c in nu_max)
    base = basic_class(kappa, G)
    top_c = G.coroot_cone_coeffs([a - b for a, b in zip(nu_max, base.nu)])
    if top_c is None or any(c < 0 for c in top_c):
        return []
    lam0 = G.pi1.lift(kappa)
    found = {}
    for J in G.delta_stable_subsets():
        L = G.levi(J)
        outside = [i for i in range(G.n_simple) if i not in J]
        orbits = []
        for i in outside:
            orb = _orbit(G, i)
            if min(orb) == i:
                orbits.append(orb)
        nu0 = L.delta_average(L.central_projection(lam0))
        a0 = G.coroot_cone_coeffs([a - b for a, b in zip(nu0, base.nu)])
        ranges = []
        for orb in orbits:
            i = orb[0]
            # coefficient at i moves by N / |O|
            lo = (-a0[i]) * len(orb)
            hi = (top_c[i] - a0[i]) * len(orb)
            ranges.append(range(_ceil(lo), _floor(hi) + 1))
        for ns in product(*ranges):
            lam = list(lam0)
            for orb, n in zip(orbits, ns):
                for c in range(G.d):
                    lam[c] += n * G.simple_coroots[orb[0]][c]
            nu = L.delta_average(L.central_projection(lam))
            if not G.is_dominant(nu):
                continue
            if any(la.dot(G.simple_roots[i], nu) <= 0 for i in outside):
                continue
            if not nu_leq(G, nu, nu_max):
                continue
            if cap is not None and any(Fraction(c).denominator > cap for c in nu):
                raise DenominatorCapExceeded("Newton point %r exceeds denominator %d" % (nu, cap))
            if nu not in found:
                tau = aw.omega_part(L, aw.translation(L, lam))
                found[nu] = SigmaClass(nu, kappa, G, tau)
    return sorted(found.values(), key=SigmaClass.sort_key)


def _orbit(G: RootDatum, i: int) -> list:
    out = [i]
    j = G.delta_perm[i]
    while j != i:
        out.append(j)
        j = G.delta_perm[j]
    return sorted(out)


def _ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def _floor(q: Fraction) -> int:
    return q.numerator // q.denominator


def minimal_classes(classes) -> list:
    """The minimal elements of a finite set of classes."""
    cs = list(classes)
    return [b for b in cs if not any(lt(c, b) for c in cs)]


def maximal_classes(classes) -> list:
    cs = list(classes)
    return [b for b in cs if not any(lt(b, c) for c in cs)]
