"""Based root data with a diagram automorphism, over exact arithmetic.

A :class:`RootDatum` is the whole group "G" as combinatorics: simple roots
and coroots inside an ambient ``Z^d``, the cocharacter lattice (all of
``Z^d`` unless a sublattice basis is given), and an automorphism ``delta``
of the based datum. Levi subdata share the lattice and ``delta`` and are
obtained from :meth:`RootDatum.levi`.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence

from . import lattice as la

CochVec = tuple  # tuple[Fraction, ...], a point of X_*(T) tensor Q

MAX_WEYL_ORDER = 200_000


class InvalidDatum(ValueError):
    """Root datum input that is not a finite-type based root datum."""


class NonStableJ(ValueError):
    """A subset of simple indices that ``delta`` does not preserve."""


@dataclass(frozen=True)
class FiniteWeylElt:
    """Element of the finite Weyl group, identified by its matrix on ``Z^d``.

    ``word`` is a reduced expression (0-based simple indices) and takes no
    part in equality.
    """
    matrix: tuple
    word: tuple = field(default=(), compare=False)

    def __repr__(self) -> str:
        return "FiniteWeylElt(%s)" % (word_str(self.word) or "1")


def word_str(word: Sequence[int]) -> str:
    return "*".join("s%d" % (i + 1) for i in word)


@dataclass(frozen=True)
class Pi1Element:
    """Class in a quotient ``Z^f + (Z/d_1) + ...`` in canonical coordinates.

    ``moduli[i] == 0`` marks a free coordinate.
    """
    coords: tuple
    moduli: tuple

    def __add__(self, other: "Pi1Element") -> "Pi1Element":
        if self.moduli != other.moduli:
            raise ValueError("elements of different groups")
        return Pi1Element(_reduce_mod(tuple(a + b for a, b in zip(self.coords, other.coords)),
                                      self.moduli), self.moduli)

    def __neg__(self) -> "Pi1Element":
        return Pi1Element(_reduce_mod(tuple(-a for a in self.coords), self.moduli), self.moduli)

    def __sub__(self, other: "Pi1Element") -> "Pi1Element":
        return self + (-other)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def to_json(self) -> list:
        return list(self.coords)


def _reduce_mod(coords, moduli):
    return tuple(c % m if m else c for c, m in zip(coords, moduli))


class Pi1Quotient:
    """``X_*`` modulo the coroots of a datum and the image of ``1 - delta``.

    The normal form comes from a Smith decomposition of the relation
    lattice; the free rows of the transform are replaced by their Hermite
    basis so that e.g. GL_n gets the plain degree map.
    """

    def __init__(self, datum: "RootDatum"):
        self.datum = datum
        B = datum.lattice_basis  # d x r
        r = len(B[0]) if B and B[0] else 0
        self.rank = r
        rel = [datum.lattice_coords(c) for c in datum.simple_coroots]
        D = datum.delta_matrix
        for k in range(r):
            col = [row[k] for row in B]
            img = la.matvec(D, col)
            rel.append(tuple(a - b for a, b in zip(datum.lattice_coords(img), datum.lattice_coords(col))))
        rel = [v for v in rel if any(v)]
        if r == 0:
            self._rows, self.moduli, self._inv = [], (), []
            return
        if rel:
            R = la.transpose(rel)  # r x m
            diag, P, _ = la.smith_form(R)
        else:
            diag, P = [], la.identity(r)
        mods = [diag[i] if i < len(diag) else 0 for i in range(r)]
        free = [i for i in range(r) if mods[i] == 0]
        if free:
            herm = la.hermite_rows([P[i] for i in free])
            for i, row in zip(free, herm):
                P[i] = row
        self._P = P
        self._keep = [i for i in range(r) if mods[i] != 1]
        self.moduli = tuple(mods[i] for i in self._keep)
        self._Pinv = la.integer_inverse(P)

    def classify(self, lam: Sequence[int]) -> Pi1Element:
        c = self.datum.lattice_coords(lam)
        if self.rank == 0:
            return Pi1Element((), ())
        y = la.matvec(self._P, c)
        return Pi1Element(_reduce_mod(tuple(y[i] for i in self._keep), self.moduli), self.moduli)

    def lift(self, k: Pi1Element) -> tuple:
        """An integral cocharacter in the class ``k``."""
        if k.moduli != self.moduli:
            raise ValueError("class belongs to a different quotient")
        y = [0] * self.rank
        for i, v in zip(self._keep, k.coords):
            y[i] = v
        c = la.matvec(self._Pinv, y)
        return tuple(la.matvec(self.datum.lattice_basis, c))

    def zero(self) -> Pi1Element:
        return Pi1Element(tuple(0 for _ in self.moduli), self.moduli)


class RootDatum:
    """Finite-type based root datum with diagram automorphism.

    Parameters are integer vectors in ``Z^d``: ``simple_roots`` (characters)
    and ``simple_coroots`` (cocharacters). ``delta_perm`` permutes simple
    indices and ``delta_matrix`` acts on cocharacters. ``lattice_basis``
    (columns) spans the cocharacter lattice when it is a proper sublattice
    of ``Z^d`` (SL_n).
    """

    def __init__(self, simple_roots, simple_coroots, ambient_rank: Optional[int] = None,
                 delta_perm=None, delta_matrix=None, name: str = "",
                 lattice_basis=None, _parent=None, _J=None):
        self.simple_roots = [tuple(int(x) for x in a) for a in simple_roots]
        self.simple_coroots = [tuple(int(x) for x in a) for a in simple_coroots]
        if ambient_rank is None:
            if not self.simple_roots:
                raise InvalidDatum("ambient_rank required when there are no roots")
            ambient_rank = len(self.simple_roots[0])
        self.d = d = int(ambient_rank)
        self.name = name
        n = self.n_simple = len(self.simple_roots)
        if len(self.simple_coroots) != n:
            raise InvalidDatum("need as many simple coroots as simple roots")
        for v in self.simple_roots + self.simple_coroots:
            if len(v) != d:
                raise InvalidDatum("vector %r not in Z^%d" % (v, d))
        self.delta_perm = tuple(range(n)) if delta_perm is None else tuple(int(i) for i in delta_perm)
        self.delta_matrix = la.identity(d) if delta_matrix is None else [list(map(int, r)) for r in delta_matrix]
        self.lattice_basis = la.identity(d) if lattice_basis is None else [list(map(int, r)) for r in lattice_basis]
        self.parent = _parent
        self.J = frozenset(range(n)) if _J is None else frozenset(_J)
        self._levis: dict = {}
        self._validate()
        self._build_roots()
        self._build_weyl_group()
        self._check_rho()

    # ------------------------------------------------------------------
    # construction

    def _validate(self):
        n, d = self.n_simple, self.d
        A = [[la.dot(a, c) for c in self.simple_coroots] for a in self.simple_roots]
        self.cartan = A
        for i in range(n):
            if A[i][i] != 2:
                raise InvalidDatum("<alpha_%d, alpha_%d^vee> = %d, expected 2" % (i + 1, i + 1, A[i][i]))
            for j in range(n):
                if i != j and (A[i][j] > 0 or (A[i][j] == 0) != (A[j][i] == 0)):
                    raise InvalidDatum("not a generalized Cartan matrix: %r" % (A,))
        if sorted(self.delta_perm) != list(range(n)):
            raise InvalidDatum("delta perm is not a permutation of the simple indices")
        D = self.delta_matrix
        if len(D) != d or any(len(r) != d for r in D):
            raise InvalidDatum("delta matrix must be %dx%d" % (d, d))
        try:
            self._delta_inv = la.integer_inverse(D)
        except (ValueError, ZeroDivisionError):
            raise InvalidDatum("delta matrix is not invertible over Z") from None
        for i, j in enumerate(self.delta_perm):
            if la.matvec(D, self.simple_coroots[i]) != self.simple_coroots[j]:
                raise InvalidDatum("delta does not send coroot %d to coroot %d" % (i + 1, j + 1))
            # characters transform by the inverse transpose
            if la.matvec(la.transpose(self._delta_inv), self.simple_roots[i]) != self.simple_roots[j]:
                raise InvalidDatum("delta does not send root %d to root %d" % (i + 1, j + 1))
        B = self.lattice_basis
        if len(B) != d:
            raise InvalidDatum("lattice basis must have %d rows" % d)
        r = len(B[0]) if B and B[0] else 0
        if la.rank(B) != r:
            raise InvalidDatum("lattice basis is not linearly independent")
        self._basis_cols = [tuple(row[k] for row in B) for k in range(r)]
        self._basis_is_identity = B == la.identity(d)
        if not self._basis_is_identity:
            _, piv = la._row_reduce([[Fraction(x) for x in col] for col in self._basis_cols])
            self._basis_solver = (piv, la.inverse([[B[i][k] for k in range(r)] for i in piv]))
        for c in self.simple_coroots:
            self.lattice_coords(c)
        for col in self._basis_cols:
            self.lattice_coords(la.matvec(D, col))
        # order of delta
        M, k = D, 1
        while M != la.identity(d):
            M = la.matmul(M, D)
            k += 1
            if k > 1000:
                raise InvalidDatum("delta has infinite order")
        self.delta_order = k

    def lattice_coords(self, lam: Sequence[int]) -> tuple:
        """Coordinates of ``lam`` in the lattice basis; raises if not in the lattice."""
        if self._basis_is_identity:
            if any(Fraction(x).denominator != 1 for x in lam):
                raise InvalidDatum("%r is not in the cocharacter lattice" % (tuple(lam),))
            return tuple(int(x) for x in lam)
        rows, inv = self._basis_solver
        c = la.matvec(inv, [lam[i] for i in rows])
        if any(x.denominator != 1 for x in c) or la.matvec(self.lattice_basis, c) != tuple(lam):
            raise InvalidDatum("%r is not in the cocharacter lattice" % (tuple(lam),))
        return tuple(int(x) for x in c)

    def in_lattice(self, lam: Sequence[int]) -> bool:
        try:
            self.lattice_coords(lam)
        except InvalidDatum:
            return False
        return True

    def _build_roots(self):
        n, A = self.n_simple, self.cartan
        # roots as coefficient vectors in the simple roots, coroots likewise
        start = [(tuple(int(i == j) for j in range(n)), tuple(int(i == j) for j in range(n)))
                 for i in range(n)]
        seen = {}
        queue = deque(start)
        for rc in start:
            seen[rc[0]] = rc[1]
        while queue:
            c, cc = queue.popleft()
            for i in range(n):
                # <alpha, alpha_i^vee> and <alpha_i, alpha^vee>
                p = sum(c[j] * A[j][i] for j in range(n))
                q = sum(A[i][j] * cc[j] for j in range(n))
                nc = tuple(c[j] - (p if j == i else 0) for j in range(n))
                ncc = tuple(cc[j] - (q if j == i else 0) for j in range(n))
                if nc not in seen:
                    seen[nc] = ncc
                    queue.append((nc, ncc))
                    if len(seen) > 10_000:
                        raise InvalidDatum("root system is not of finite type")
        for c in seen:
            if not (all(x >= 0 for x in c) or all(x <= 0 for x in c)):
                raise InvalidDatum("root system is not of finite type")
        pos = sorted((c for c in seen if sum(c) > 0), key=lambda c: (sum(c), c))
        keys = pos + [tuple(-x for x in c) for c in pos]
        self.root_coeffs = keys
        self.n_pos = len(keys) // 2
        self.roots = [tuple(sum(c[j] * self.simple_roots[j][k] for j in range(n)) for k in range(self.d))
                      for c in keys]
        self.coroots = [tuple(sum(seen[c][j] * self.simple_coroots[j][k] for j in range(n))
                              for k in range(self.d)) for c in keys]
        self.root_index = {r: i for i, r in enumerate(self.roots)}
        self.is_positive = [i < self.n_pos for i in range(len(keys))]
        self.neg = [(i + self.n_pos) % len(keys) if keys else 0 for i in range(len(keys))]
        self.simple_index = [self.root_index[a] for a in self.simple_roots]
        Dt = la.transpose(self._delta_inv)
        self.delta_root = [self.root_index[la.matvec(Dt, a)] for a in self.roots]

    def _reflection_matrix(self, root: int):
        a, c = self.roots[root], self.coroots[root]
        return tuple(tuple(int(i == j) - c[i] * a[j] for j in range(self.d)) for i in range(self.d))

    def _build_weyl_group(self):
        d = self.d
        ident = tuple(tuple(int(i == j) for j in range(d)) for i in range(d))
        gens = [self._reflection_matrix(self.simple_index[i]) for i in range(self.n_simple)]
        nroots = len(self.roots)
        gen_perm = []
        for i in range(self.n_simple):
            a, c = self.simple_roots[i], self.simple_coroots[i]
            gen_perm.append(tuple(self.root_index[tuple(x - la.dot(r, c) * y for x, y in zip(r, a))]
                                  for r in self.roots))
        self._gens = gens
        elts = [ident]
        words = [()]
        perms = [tuple(range(nroots))]
        index = {ident: 0}
        queue = deque([0])
        while queue:
            k = queue.popleft()
            m = elts[k]
            for i, g in enumerate(gens):
                nm = tuple(tuple(sum(m[r][t] * g[t][c] for t in range(d)) for c in range(d)) for r in range(d))
                if nm not in index:
                    index[nm] = len(elts)
                    elts.append(nm)
                    words.append(words[k] + (i,))
                    # (w s_i)(alpha) = w(s_i alpha)
                    perms.append(tuple(perms[k][gen_perm[i][j]] for j in range(nroots)))
                    queue.append(index[nm])
                    if len(elts) > MAX_WEYL_ORDER:
                        raise InvalidDatum("Weyl group too large or infinite")
        self._mats = elts
        self._index = index
        self.W = [FiniteWeylElt(m, w) for m, w in zip(elts, words)]
        self._rootperm = perms
        self._wlen = [len(w) for w in words]
        self._inv = [index[tuple(tuple(r) for r in la.integer_inverse(m))] for m in elts]
        self.identity_w = self.W[0]
        self._mul_cache: dict = {}
        self._gen_elts = [self.W[index[g]] for g in gens]

    def _check_rho(self):
        two_rho = [sum(self.roots[k][j] for k in range(self.n_pos)) for j in range(self.d)]
        self.two_rho = tuple(two_rho)
        self.rho = tuple(Fraction(x, 2) for x in two_rho)
        for i, c in enumerate(self.simple_coroots):
            if la.dot(self.rho, c) != 1:
                raise InvalidDatum("<rho, alpha_%d^vee> != 1" % (i + 1))

    # ------------------------------------------------------------------
    # basic accessors

    def __repr__(self) -> str:
        return "RootDatum(%s)" % (self.name or "d=%d" % self.d)

    @property
    def rank(self) -> int:
        """Rank of the cocharacter lattice."""
        return len(self._basis_cols)

    @property
    def weyl_order(self) -> int:
        return len(self.W)

    @property
    def positive_roots(self) -> list:
        return self.roots[:self.n_pos]

    def simple_indices(self) -> tuple:
        """Indices of this datum's simple roots in the top-level datum."""
        if self.parent is None:
            return tuple(range(self.n_simple))
        return tuple(sorted(self.J))

    @property
    def top(self) -> "RootDatum":
        return self if self.parent is None else self.parent

    def weyl(self, m) -> FiniteWeylElt:
        """Canonical element (with reduced word) for a matrix or element."""
        if isinstance(m, FiniteWeylElt):
            m = m.matrix
        try:
            return self.W[self._index[m]]
        except KeyError:
            raise ValueError("matrix is not in the Weyl group of %r" % self) from None

    def contains(self, v: FiniteWeylElt) -> bool:
        return v.matrix in self._index

    def idx(self, v: FiniteWeylElt) -> int:
        return self._index[v.matrix]

    def wlength(self, v: FiniteWeylElt) -> int:
        return self._wlen[self._index[v.matrix]]

    def wmul(self, u: FiniteWeylElt, v: FiniteWeylElt) -> FiniteWeylElt:
        key = (self._index[u.matrix], self._index[v.matrix])
        r = self._mul_cache.get(key)
        if r is None:
            m = tuple(tuple(x) for x in la.matmul(u.matrix, v.matrix))
            r = self._mul_cache[key] = self._index[m]
        return self.W[r]

    def winv(self, v: FiniteWeylElt) -> FiniteWeylElt:
        return self.W[self._inv[self._index[v.matrix]]]

    def s(self, i: int) -> FiniteWeylElt:
        """Simple reflection (0-based local index)."""
        return self._gen_elts[i]

    def from_word(self, word: Iterable[int]) -> FiniteWeylElt:
        v = self.identity_w
        for i in word:
            v = self.wmul(v, self.s(i))
        return v

    def reflection(self, root: int) -> FiniteWeylElt:
        return self.weyl(self._reflection_matrix(root))

    def root_action(self, v: FiniteWeylElt) -> tuple:
        """Permutation ``k -> index of v(alpha_k)`` of root indices."""
        return self._rootperm[self._index[v.matrix]]

    def act(self, v: FiniteWeylElt, x: Sequence) -> tuple:
        """Linear action of ``v`` on a (rational) cocharacter."""
        return la.matvec(v.matrix, x)

    def pair(self, root: int, x: Sequence):
        return la.dot(self.roots[root], x)

    def delta_vec(self, x: Sequence) -> tuple:
        return la.matvec(self.delta_matrix, x)

    def delta_inv_vec(self, x: Sequence) -> tuple:
        return la.matvec(self._delta_inv, x)

    def delta_w(self, v: FiniteWeylElt) -> FiniteWeylElt:
        m = la.matmul(la.matmul(self.delta_matrix, v.matrix), self._delta_inv)
        return self.weyl(tuple(tuple(r) for r in m))

    def delta_inv_w(self, v: FiniteWeylElt) -> FiniteWeylElt:
        m = la.matmul(la.matmul(self._delta_inv, v.matrix), self.delta_matrix)
        return self.weyl(tuple(tuple(r) for r in m))

    # ------------------------------------------------------------------
    # dominance

    def dominant_rep(self, x: Sequence) -> tuple[tuple, FiniteWeylElt]:
        """``(x_dom, v)`` with ``v . x == x_dom`` dominant."""
        x = tuple(Fraction(c) for c in x)
        v = self.identity_w
        while True:
            for i in range(self.n_simple):
                if la.dot(self.simple_roots[i], x) < 0:
                    x = self.act(self.s(i), x)
                    v = self.wmul(self.s(i), v)
                    break
            else:
                return x, v

    def is_dominant(self, x: Sequence) -> bool:
        return all(la.dot(a, x) >= 0 for a in self.simple_roots)

    def coroot_cone_coeffs(self, x: Sequence, J: Optional[Iterable[int]] = None):
        """Rational ``c`` with ``x == sum_{i in J} c_i alpha_i^vee``, or None.

        ``J`` is a set of local simple indices, all of them by default.
        """
        J = range(self.n_simple) if J is None else sorted(J)
        return la.solve_combination([self.simple_coroots[i] for i in J], x)

    def central_projection(self, x: Sequence) -> tuple:
        """Component of ``x`` killed by all roots, along the coroot span."""
        x = tuple(Fraction(c) for c in x)
        if not self.n_simple:
            return x
        rhs = [la.dot(a, x) for a in self.simple_roots]
        c = la.solve_combination([list(col) for col in zip(*self.cartan)], rhs)
        # sum_j c_j <alpha_i, alpha_j^vee> = <alpha_i, x>
        return tuple(xi - sum(cj * self.simple_coroots[j][k] for j, cj in enumerate(c))
                     for k, xi in enumerate(x))

    def delta_average(self, x: Sequence) -> tuple:
        acc = [Fraction(0)] * self.d
        y = tuple(Fraction(c) for c in x)
        for _ in range(self.delta_order):
            acc = [a + b for a, b in zip(acc, y)]
            y = self.delta_vec(y)
        return tuple(a / self.delta_order for a in acc)

    # ------------------------------------------------------------------
    # subsets, Levis, fundamental group

    def delta_stable_subsets(self) -> list[frozenset]:
        out = []
        idx = range(self.n_simple)
        for k in range(self.n_simple + 1):
            for J in combinations(idx, k):
                if {self.delta_perm[j] for j in J} == set(J):
                    out.append(frozenset(J))
        return out

    def is_delta_stable(self, J: Iterable[int]) -> bool:
        J = set(J)
        return {self.delta_perm[j] for j in J} == J

    def levi(self, J: Iterable[int]) -> "RootDatum":
        """Levi subdatum on the local simple indices ``J`` (must be delta-stable)."""
        J = frozenset(J)
        if J == frozenset(range(self.n_simple)):
            return self
        if not self.is_delta_stable(J):
            raise NonStableJ("J=%s is not delta-stable" % sorted(i + 1 for i in J))
        lev = self._levis.get(J)
        if lev is None:
            order = sorted(J)
            pos = {j: k for k, j in enumerate(order)}
            top_idx = self.simple_indices()
            lev = RootDatum([self.simple_roots[j] for j in order],
                            [self.simple_coroots[j] for j in order],
                            ambient_rank=self.d,
                            delta_perm=[pos[self.delta_perm[j]] for j in order],
                            delta_matrix=self.delta_matrix,
                            name="%s_J%s" % (self.name, "".join(str(top_idx[j] + 1) for j in order) or "0"),
                            lattice_basis=self.lattice_basis,
                            _parent=self.top,
                            _J={top_idx[j] for j in order})
            self._levis[J] = lev
        return lev

    def levi_top(self, J: Iterable[int]) -> "RootDatum":
        """Levi of the top-level datum for top-level indices ``J``."""
        return self.top.levi(J)

    @cached_property
    def pi1(self) -> Pi1Quotient:
        return Pi1Quotient(self)

    def pi1_class(self, lam: Sequence[int], level: Optional["RootDatum"] = None) -> Pi1Element:
        return (level or self).pi1.classify(lam)

    # ------------------------------------------------------------------
    # serialization

    def to_json(self) -> dict:
        out = {"name": self.name, "ambient_rank": self.d,
               "simple_roots": [list(a) for a in self.simple_roots],
               "simple_coroots": [list(a) for a in self.simple_coroots],
               "delta": {"perm": [i + 1 for i in self.delta_perm], "matrix": self.delta_matrix}}
        if self.lattice_basis != la.identity(self.d):
            out["cocharacter_basis"] = la.transpose(self.lattice_basis)
        return out


# ----------------------------------------------------------------------
# built-ins


def _type_a(n: int):
    roots = [tuple(int(k == i) - int(k == i + 1) for k in range(n)) for i in range(n - 1)]
    return roots, list(roots)


def _flip_matrix(n: int):
    # lambda -> -w_0(lambda) on Z^n
    return [[-int(j == n - 1 - i) for j in range(n)] for i in range(n)]


def _parse_delta(delta, n_simple: int, d: int, family: str, n: int):
    if delta in (None, "id", "identity"):
        return None, None
    if isinstance(delta, str) and delta in ("flip", "perm:flip"):
        perm = list(range(n_simple))[::-1]
    elif isinstance(delta, str) and delta.startswith("perm:"):
        perm = [int(x) - 1 for x in delta[5:].split(",")]
    else:
        perm = [int(x) - 1 for x in delta]
    if perm == list(range(n_simple)):
        return None, None
    if family in ("GL", "SL") and perm == list(range(n_simple))[::-1]:
        return perm, _flip_matrix(n)
    raise InvalidDatum("unsupported delta %r for %s" % (delta, family))


def build_root_datum(spec, delta=None) -> RootDatum:
    """Build from ``"GL:n"``, ``"SL:n"``, ``"SP:2n"``, a JSON dict or a JSON path.

    ``delta`` overrides the automorphism for built-ins: ``"id"``,
    ``"flip"`` or ``"perm:i,j,..."`` (1-based).
    """
    if isinstance(spec, dict):
        return datum_from_json(spec)
    if isinstance(spec, str) and spec.startswith("file:"):
        try:
            with open(spec[5:]) as fh:
                obj = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InvalidDatum("cannot read datum file %r: %s" % (spec[5:], exc)) from None
        return datum_from_json(obj)
    if not isinstance(spec, str) or ":" not in spec:
        raise InvalidDatum("unknown datum spec %r" % (spec,))
    family, _, size = spec.partition(":")
    family = family.upper()
    try:
        size = int(size)
    except ValueError:
        raise InvalidDatum("bad size in %r" % spec) from None
    if family in ("GL", "SL"):
        n = size
        if n < 1 or (family == "SL" and n < 2):
            raise InvalidDatum("bad rank in %r" % spec)
        roots, coroots = _type_a(n)
        perm, D = _parse_delta(delta, n - 1, n, family, n)
        basis = None
        if family == "SL":
            basis = la.transpose([list(c) for c in coroots])
        return RootDatum(roots, coroots, ambient_rank=n, delta_perm=perm, delta_matrix=D,
                         name=spec.upper() if delta in (None, "id") else "%s(%s)" % (spec.upper(), delta),
                         lattice_basis=basis)
    if family == "SP":
        if size % 2 or size < 2:
            raise InvalidDatum("SP needs an even size")
        n = size // 2
        roots = [tuple(int(k == i) - int(k == i + 1) for k in range(n)) for i in range(n - 1)]
        coroots = list(roots)
        roots.append(tuple(2 * int(k == n - 1) for k in range(n)))
        coroots.append(tuple(int(k == n - 1) for k in range(n)))
        if delta not in (None, "id", "identity"):
            raise InvalidDatum("SP has no nontrivial diagram automorphism")
        return RootDatum(roots, coroots, ambient_rank=n, name=spec.upper())
    raise InvalidDatum("unknown family %r" % family)


def datum_from_json(obj: dict) -> RootDatum:
    if "type" in obj:
        t = str(obj["type"]).upper()
        n = int(obj["rank"])
        return build_root_datum("%s:%d" % (t, n), delta=obj.get("delta"))
    try:
        delta = obj.get("delta") or {}
        perm = delta.get("perm")
        if perm is not None:
            perm = [int(i) - 1 for i in perm]
        basis = obj.get("cocharacter_basis")
        if basis is not None:
            basis = la.transpose(basis)
        return RootDatum(obj["simple_roots"], obj["simple_coroots"],
                         ambient_rank=obj.get("ambient_rank"),
                         delta_perm=perm, delta_matrix=delta.get("matrix"),
                         name=obj.get("name", ""), lattice_basis=basis)
    except (KeyError, TypeError) as exc:
        raise InvalidDatum("malformed root datum JSON: %s" % exc) from None
