"""(J, w, delta)-alcove elements and the minimal Newton stratum.

For a pair ``(J, w)`` the element ``x`` qualifies when
``w^-1 x delta(w)`` lies in the Iwahori-Weyl group of the Levi ``M_J`` and
``x`` does not shrink the Iwahori along any root ``w(beta)`` with
``beta`` positive outside ``Phi_J``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from . import affine as aw
from . import sigma as sg
from .affine import AffineWeylElt
from .rootdatum import FiniteWeylElt, NonStableJ, RootDatum


class NotAnAlcove(ValueError):
    """``x`` is not a (J, w)-alcove element for the requested pair."""


@dataclass(frozen=True)
class AlcoveCertificate:
    J: frozenset
    w: FiniteWeylElt
    normalized: bool
    tilde_x: AffineWeylElt

    def to_json(self, G: RootDatum) -> dict:
        from .parse import format_element
        return {"J": sorted(j + 1 for j in self.J),
                "w": "*".join("s%d" % (i + 1) for i in G.weyl(self.w).word) or "1",
                "normalized": self.normalized,
                "tilde_x": format_element(G, self.tilde_x)}


def _check_J(G: RootDatum, J) -> frozenset:
    J = frozenset(J)
    if not G.is_delta_stable(J):
        raise NonStableJ("J=%s is not delta-stable" % sorted(j + 1 for j in J))
    return J


def levi_positive_roots(G: RootDatum, J: Iterable[int]) -> frozenset:
    """Indices of positive roots of ``G`` lying in ``Phi_J``."""
    J = set(J)
    return frozenset(k for k in range(G.n_pos)
                     if all(c == 0 for i, c in enumerate(G.root_coeffs[k]) if i not in J))


def tilde(G: RootDatum, x: AffineWeylElt, w: FiniteWeylElt) -> AffineWeylElt:
    """``w^-1 x delta(w)``."""
    fw = aw.finite(G, w)
    return aw.mul(G, aw.mul(G, aw.inv(G, fw), x), aw.delta_of(G, fw))


def is_alcove_element(G: RootDatum, x: AffineWeylElt, J, w: FiniteWeylElt) -> bool:
    J = _check_J(G, J)
    L = G.levi(J)
    xt = tilde(G, x, w)
    if not L.contains(xt.v):
        return False
    inside = levi_positive_roots(G, J)
    perm = G.root_action(w)
    for k in range(G.n_pos):
        if k in inside:
            continue
        a = perm[k]
        if aw.offset(G, x, a) < aw.base_offset(G, a):
            return False
    return True


def min_coset_rep(G: RootDatum, w: FiniteWeylElt, J) -> FiniteWeylElt:
    """Shortest element of ``w W_J``."""
    L = G.levi(frozenset(J))
    return min((G.wmul(w, u) for u in L.W), key=lambda z: (G.wlength(z), G.idx(z)))


def min_coset_reps(G: RootDatum, J) -> list:
    """Minimal length representatives of ``W / W_J`` in canonical order."""
    J = frozenset(J)
    return [w for w in G.W if all(G.wlength(G.wmul(w, G.s(j))) > G.wlength(w) for j in J)]


def normalize(G: RootDatum, x: AffineWeylElt, J, w: FiniteWeylElt) -> AlcoveCertificate:
    J = _check_J(G, J)
    if not is_alcove_element(G, x, J, w):
        raise NotAnAlcove("x is not a (J, w)-alcove element")
    w2 = min_coset_rep(G, w, J)
    return AlcoveCertificate(J, w2, True, tilde(G, x, w2))


def find_minimal_pair(G: RootDatum, x: AffineWeylElt) -> AlcoveCertificate:
    for J in G.delta_stable_subsets():
        for w in min_coset_reps(G, J):
            if is_alcove_element(G, x, J, w):
                return AlcoveCertificate(J, w, True, tilde(G, x, w))
    raise AssertionError("J = S always qualifies")  # pragma: no cover


def all_minimal_pairs(G: RootDatum, x: AffineWeylElt) -> list:
    """Every normalized certificate whose ``J`` is inclusion-minimal."""
    hits = {}
    for J in G.delta_stable_subsets():
        ws = [w for w in min_coset_reps(G, J) if is_alcove_element(G, x, J, w)]
        if ws:
            hits[J] = ws
    out = []
    for J, ws in hits.items():
        if any(K < J for K in hits):
            continue
        out.extend(AlcoveCertificate(J, w, True, tilde(G, x, w)) for w in ws)
    return out


def minimal_newton_from(G: RootDatum, cert: AlcoveCertificate) -> sg.SigmaClass:
    L = G.levi(cert.J)
    k = L.pi1.classify(cert.tilde_x.lam)
    return sg.levi_transfer(sg.basic_class(k, L))


def minimal_newton(G: RootDatum, x: AffineWeylElt) -> sg.SigmaClass:
    """The unique minimal class of ``B(G)_x``, from a minimal alcove pair."""
    return minimal_newton_from(G, find_minimal_pair(G, x))


def basic_nonempty(G: RootDatum, x: AffineWeylElt) -> bool:
    return sg.is_basic(minimal_newton(G, x))


def pair_rho(G: RootDatum, nu) -> Fraction:
    return sum((Fraction(r) * Fraction(n) for r, n in zip(G.rho, nu)), Fraction(0))


def levi_length_gap(G: RootDatum, M: RootDatum, nu) -> Fraction:
    """Predicted ``l_G(x) - l_M(x~)`` for a class of ``I_M x~ I_M`` with Newton point ``nu``.

    The Iwahori here sits on the positive side, so the Levi chamber that
    matches the length comparison is the antidominant one; the pairing is
    ``<2(rho_M - rho_G), nu>`` on the ``M``-antidominant representative.
    """
    nu = sg.antidominant(M, nu)
    return sum(((Fraction(a) - Fraction(b)) * n for a, b, n in zip(M.two_rho, G.two_rho, nu)),
               Fraction(0))


def newton_agrees(G: RootDatum, M: RootDatum, nu) -> bool:
    """Whether the ``M``-Newton point of a class is already ``G``-normalized (same chamber convention)."""
    return sg.antidominant(M, nu) == sg.antidominant(G, nu)


def virtual_dimension(G: RootDatum, x: AffineWeylElt, b: sg.SigmaClass,
                      budget: int = aw.DEFAULT_BUDGET) -> Fraction:
    """``(l(x) + l(eta(x)) - def(b)) / 2 - <rho, nu_b>`` at the level of ``G``."""
    if b.level is not G:
        raise ValueError("class is not at the level of the given datum")
    total = aw.length(G, x) + G.wlength(aw.eta(G, x)) - sg.defect(b)
    return Fraction(total, 2) - pair_rho(G, b.nu)


def corrected_alcove_pair(G: RootDatum, x: AffineWeylElt, J) -> Optional[AlcoveCertificate]:
    """First normalized certificate for ``J`` over ``W^J`` (None if there is none)."""
    J = _check_J(G, J)
    for w in min_coset_reps(G, J):
        if is_alcove_element(G, x, J, w):
            return AlcoveCertificate(J, w, True, tilde(G, x, w))
    return None
