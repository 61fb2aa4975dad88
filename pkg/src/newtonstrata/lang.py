"""Lang-type equations ``w - M sigma(w) = v`` over ``F_{p^k}[t]/t^N``.

Field elements are ints in ``[0, p^k)``; base-``p`` digit ``i`` is the
coordinate of ``z^i`` for a fixed primitive ``z``. The Frobenius ``sigma``
raises coefficients to the ``q``-th power. In mode ``"fix_t"`` it fixes
``t``; in mode ``"frobenius"`` it also sends ``t`` to ``t^q``, which is what
makes the successive-approximation iteration contract.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Sequence

import numpy as np

FIX_T, FROBENIUS = "fix_t", "frobenius"


class ResidueFieldTooSmall(ValueError):
    """The equation has no solution over the configured finite residue field."""


class FieldError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


class GF:
    """The field with ``p^k`` elements, via exp/log tables."""

    def __init__(self, p: int, k: int = 1):
        if not _is_prime(p):
            raise FieldError("p=%d is not prime" % p)
        if k < 1 or p ** k > 1 << 16:
            raise FieldError("unsupported field size %d^%d" % (p, k))
        self.p, self.k, self.order = p, k, p ** k
        self.modulus = self._find_primitive_poly()
        self.exp = [0] * (2 * self.order)
        self.log = [0] * self.order
        x = 1
        for i in range(self.order - 1):
            self.exp[i] = x
            self.log[x] = i
            x = self._times_z(x)
        for i in range(self.order - 1, 2 * self.order):
            self.exp[i] = self.exp[i - (self.order - 1)]

    def __repr__(self) -> str:
        return "GF(%d^%d)" % (self.p, self.k)

    def digits(self, a: int) -> list:
        return [(a // self.p ** i) % self.p for i in range(self.k)]

    def from_digits(self, ds: Sequence[int]) -> int:
        return sum((d % self.p) * self.p ** i for i, d in enumerate(ds))

    def _times_z(self, a: int, modulus=None) -> int:
        m = modulus or self.modulus  # monic, degree k, low-to-high
        ds = [0] + self.digits(a)
        top = ds[self.k]
        ds = [(ds[i] - top * m[i]) % self.p for i in range(self.k)]
        return self.from_digits(ds)

    def _find_primitive_poly(self) -> tuple:
        p, k = self.p, self.k
        if k == 1:
            # z = a primitive root mod p; encode "z" as digit list [-g]
            for g in range(1, p):
                if len({pow(g, e, p) for e in range(p - 1)}) == p - 1:
                    return ((-g) % p, 1)
        for tail in product(range(p), repeat=k):
            m = tuple(tail) + (1,)
            if m[0] == 0:
                continue
            x, seen = 1, set()
            for _ in range(p ** k - 1):
                if x in seen:
                    break
                seen.add(x)
                x = self._times_z(x, m)
            if len(seen) == p ** k - 1 and x == 1:
                return m
        raise FieldError("no primitive polynomial")  # pragma: no cover

    @property
    def _add_table(self):
        t = self.__dict__.get("_addt")
        if t is None:
            t = self.__dict__["_addt"] = [[self._add_slow(a, b) for b in range(self.order)]
                                          for a in range(self.order)]
        return t

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.order <= 256:
            return self._add_table[a][b]
        return self._add_slow(a, b)

    def _add_slow(self, a: int, b: int) -> int:
        return self.from_digits([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return self.from_digits([-x for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e else 1
        return self.exp[(self.log[a] * e) % (self.order - 1)]

    def elements(self) -> range:
        return range(self.order)


@lru_cache(maxsize=None)
def field(p: int, k: int = 1) -> GF:
    return GF(p, k)


def check_q(F: GF, q: int) -> None:
    e, r = 0, q
    while r % F.p == 0:
        r //= F.p
        e += 1
    if r != 1 or e == 0:
        raise FieldError("q=%d is not a power of p=%d" % (q, F.p))


# ----------------------------------------------------------------------
# truncated series


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple
    N: int
    F: GF

    @classmethod
    def zero(cls, F: GF, N: int) -> "TruncatedSeries":
        return cls((0,) * N, N, F)

    @classmethod
    def of(cls, F: GF, N: int, coeffs: Sequence[int]) -> "TruncatedSeries":
        cs = [int(c) % F.order for c in coeffs][:N]
        return cls(tuple(cs + [0] * (N - len(cs))), N, F)

    def __add__(self, o: "TruncatedSeries") -> "TruncatedSeries":
        return TruncatedSeries(tuple(self.F.add(a, b) for a, b in zip(self.coeffs, o.coeffs)), self.N, self.F)

    def __sub__(self, o: "TruncatedSeries") -> "TruncatedSeries":
        return TruncatedSeries(tuple(self.F.sub(a, b) for a, b in zip(self.coeffs, o.coeffs)), self.N, self.F)

    def __mul__(self, o: "TruncatedSeries") -> "TruncatedSeries":
        F, N = self.F, self.N
        out = [0] * N
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(N - i):
                    if o.coeffs[j]:
                        out[i + j] = F.add(out[i + j], F.mul(a, o.coeffs[j]))
        return TruncatedSeries(tuple(out), N, F)

    def sigma(self, q: int, mode: str = FIX_T) -> "TruncatedSeries":
        F, N = self.F, self.N
        if mode == FIX_T:
            return TruncatedSeries(tuple(F.pow(a, q) for a in self.coeffs), N, F)
        out = [0] * N
        for i, a in enumerate(self.coeffs):
            if i * q < N:
                out[i * q] = F.pow(a, q)
        return TruncatedSeries(tuple(out), N, F)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int:
        return next((i for i, c in enumerate(self.coeffs) if c), self.N)

    def __str__(self) -> str:
        return format_series(self)


def format_series(s: TruncatedSeries) -> str:
    terms = []
    for i, c in enumerate(s.coeffs):
        if not c:
            continue
        tp = "" if i == 0 else ("t" if i == 1 else "t^%d" % i)
        if not tp:
            terms.append(str(c))
        elif c == 1:
            terms.append(tp)
        else:
            terms.append("%d*%s" % (c, tp))
    return " + ".join(terms) or "0"


_TERM = re.compile(r"^(?:(\d+)\s*\*?\s*)?(t(?:\^(\d+))?)?$")


def parse_series(text: str, F: GF, N: int) -> TruncatedSeries:
    """Parse ``"c0 + c1*t + c2*t^2"``; coefficients are field-element ints."""
    coeffs = [0] * N
    for raw in text.split("+"):
        term = raw.strip()
        m = _TERM.match(term)
        if not term or not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError("bad series term %r" % raw)
        c = int(m.group(1)) if m.group(1) is not None else 1
        if c >= F.order:
            raise ValueError("coefficient %d outside %r" % (c, F))
        e = 0 if m.group(2) is None else (int(m.group(3)) if m.group(3) else 1)
        if e < N:
            coeffs[e] = F.add(coeffs[e], c)
    return TruncatedSeries(tuple(coeffs), N, F)


# ----------------------------------------------------------------------
# linear algebra over F_p


def solve_mod_p(A: np.ndarray, b: np.ndarray, p: int):
    """One solution of ``A x = b`` over ``F_p`` (free variables zero), or None."""
    A = np.array(A, dtype=np.int64) % p
    b = np.array(b, dtype=np.int64) % p
    m, n = A.shape
    aug = np.concatenate([A, b.reshape(-1, 1)], axis=1)
    piv_cols = []
    r = 0
    for c in range(n):
        rows = np.nonzero(aug[r:, c])[0]
        if rows.size == 0:
            continue
        pr = r + rows[0]
        if pr != r:
            aug[[r, pr]] = aug[[pr, r]]
        aug[r] = (aug[r] * pow(int(aug[r, c]), -1, p)) % p
        col = aug[:, c].copy()
        col[r] = 0
        aug = (aug - np.outer(col, aug[r])) % p
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    if np.any(aug[r:, n] % p):
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, c in enumerate(piv_cols):
        x[c] = aug[i, n]
    return x


# ----------------------------------------------------------------------
# the equation


def _mat_sigma_apply(M, w, q, mode):
    n = len(w)
    sw = [x.sigma(q, mode) for x in w]
    out = []
    for i in range(n):
        acc = TruncatedSeries.zero(w[0].F, w[0].N)
        for j in range(n):
            acc = acc + M[i][j] * sw[j]
        out.append(acc)
    return out


def residual(M, v, w, q: int, mode: str = FIX_T) -> list:
    """``w - M sigma(w) - v``."""
    msw = _mat_sigma_apply(M, w, q, mode)
    return [a - b - c for a, b, c in zip(w, msw, v)]


def _system(M, q, mode, F: GF, n: int, N: int, degrees: range):
    """Matrix over F_p of ``w -> w - M sigma(w)`` restricted to the given t-degrees of w."""
    rows = n * N * F.k
    cols = []
    for l, i, j in product(degrees, range(n), range(F.k)):
        c = F.p ** j
        sc = F.pow(c, q)
        l2 = l if mode == FIX_T else l * q
        out = [[0] * N for _ in range(n)]
        out[i][l] = c
        if l2 < N:
            for r in range(n):
                m = M[r][i].coeffs
                for d in range(N - l2):
                    if m[d]:
                        out[r][l2 + d] = F.sub(out[r][l2 + d], F.mul(m[d], sc))
        col = []
        for r in range(n):
            for x in out[r]:
                col.extend(F.digits(x))
        cols.append(col)
    if not cols:
        return np.zeros((rows, 0), dtype=np.int64)
    return np.array(cols, dtype=np.int64).T


def _flatten(F: GF, vs) -> np.ndarray:
    out = []
    for s in vs:
        for c in s.coeffs:
            out.extend(F.digits(c))
    return np.array(out, dtype=np.int64)


def _unflatten(F: GF, x, n: int, N: int, degrees: range) -> list:
    coeffs = [[[0] * F.k for _ in range(N)] for _ in range(n)]
    idx = 0
    for l, i, j in product(degrees, range(n), range(F.k)):
        coeffs[i][l][j] = int(x[idx])
        idx += 1
    return [TruncatedSeries(tuple(F.from_digits(d) for d in row), N, F) for row in coeffs]


def _solve_mod_t(M, v, q, F, n):
    """Residue-field equation ``w0 - M0 frob(w0) = v0``."""
    M0 = [[TruncatedSeries.of(F, 1, [m.coeffs[0]]) for m in row] for row in M]
    v0 = [TruncatedSeries.of(F, 1, [s.coeffs[0]]) for s in v]
    if all(s.is_zero() for s in v0):
        return [0] * n
    A = _system(M0, q, FIX_T, F, n, 1, range(1))
    x = solve_mod_p(A, _flatten(F, v0), F.p)
    if x is None:
        raise ResidueFieldTooSmall("no solution modulo t over %r" % F)
    return [s.coeffs[0] for s in _unflatten(F, x, n, 1, range(1))]


def solve_lang(M, v, N: int, q: int, mode: str = FIX_T) -> list:
    """A vector ``w`` with ``w - M sigma(w) = v`` modulo ``t^N``.

    ``M`` is an ``n x n`` list of :class:`TruncatedSeries`, ``v`` a list of
    ``n`` series, all at precision ``N`` over the same field. When
    ``v = 0 mod t`` the returned ``w`` is ``0 mod t``.
    """
    n = len(v)
    if N < 1:
        raise ValueError("precision must be positive")
    F = v[0].F
    check_q(F, q)
    for s in list(v) + [m for row in M for m in row]:
        if s.N != N or s.F is not F:
            raise ValueError("all entries must share precision N=%d and field %r" % (N, F))
    if mode == FROBENIUS:
        return _solve_iterative(M, v, N, q, F, n)
    if mode != FIX_T:
        raise ValueError("unknown Frobenius mode %r" % mode)
    b = _flatten(F, v)
    if all(s.coeffs[0] == 0 for s in v):
        # look for a solution vanishing mod t first
        if N == 1:
            return [TruncatedSeries.zero(F, N) for _ in range(n)]
        x = solve_mod_p(_system(M, q, FIX_T, F, n, N, range(1, N)), b, F.p)
        if x is not None:
            return _unflatten(F, x, n, N, range(1, N))
    x = solve_mod_p(_system(M, q, FIX_T, F, n, N, range(N)), b, F.p)
    if x is None:
        raise ResidueFieldTooSmall("no solution over %r at precision %d" % (F, N))
    return _unflatten(F, x, n, N, range(N))


def _solve_iterative(M, v, N, q, F, n) -> list:
    w0 = _solve_mod_t(M, v, q, F, n)
    w = [TruncatedSeries.of(F, N, [c]) for c in w0]
    prec = 1
    while prec < N:
        msw = _mat_sigma_apply(M, w, q, FROBENIUS)
        # w <- w + (v - w + M sigma(w)); exact to t^{q prec} afterwards
        w = [a + (b - a + c) for a, b, c in zip(w, v, msw)]
        prec *= q
    return w


def solve_iterates(M, v, N: int, q: int) -> list:
    """The successive approximations of the Frobenius-mode iteration (for inspection)."""
    F = v[0].F
    n = len(v)
    w = [TruncatedSeries.of(F, N, [c]) for c in _solve_mod_t(M, v, q, F, n)]
    out = [(1, w)]
    prec = 1
    while prec < N:
        msw = _mat_sigma_apply(M, w, q, FROBENIUS)
        w = [a + (b - a + c) for a, b, c in zip(w, v, msw)]
        prec *= q
        out.append((min(prec, N), w))
    return out


def random_instance(rng, F: GF, n: int, N: int, q: int, mode: str = FIX_T, zero_mod_t: bool = False):
    """``(M, v, w_true)`` with ``v = w_true - M sigma(w_true)``."""
    M = [[TruncatedSeries.of(F, N, [rng.randrange(F.order) for _ in range(N)]) for _ in range(n)]
         for _ in range(n)]
    w = [TruncatedSeries.of(F, N, [0 if (zero_mod_t and i == 0) else rng.randrange(F.order)
                                   for i in range(N)]) for _ in range(n)]
    msw = _mat_sigma_apply(M, w, q, mode)
    v = [a - b for a, b in zip(w, msw)]
    return M, v, w
