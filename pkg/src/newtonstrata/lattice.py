"""Exact integer and rational linear algebra on small dense matrices.

Matrices are lists of rows. Everything stays in ``int`` or ``Fraction``;
nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    return [[sum(x * b[k][j] for k, x in enumerate(row)) for j in range(len(b[0]))]
            for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*a)]


def dot(u: Sequence, v: Sequence):
    return sum(x * y for x, y in zip(u, v))


def _row_reduce(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form. Returns (rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots = []
    if not rows:
        return rows, pivots
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(a: Sequence[Sequence]) -> int:
    if not a or not a[0]:
        return 0
    _, piv = _row_reduce([[Fraction(x) for x in row] for row in a])
    return len(piv)


def solve_combination(columns: Sequence[Sequence], target: Sequence) -> Optional[tuple[Fraction, ...]]:
    """Find rationals c with sum_i c_i * columns[i] == target, or None.

    When the columns are dependent the solution with free variables set to
    zero is returned.
    """
    n = len(target)
    if not columns:
        return () if all(x == 0 for x in target) else None
    aug = [[Fraction(col[i]) for col in columns] + [Fraction(target[i])] for i in range(n)]
    red, piv = _row_reduce(aug)
    m = len(columns)
    if m in piv:
        return None
    sol = [Fraction(0)] * m
    for row, c in zip(red, piv):
        sol[c] = row[m]
    return tuple(sol)


def inverse(a: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    red, piv = _row_reduce(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def integer_inverse(a: Sequence[Sequence[int]]) -> Matrix:
    inv = inverse(a)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return out


def smith_form(a: Sequence[Sequence[int]]) -> tuple[list[int], Matrix, Matrix]:
    """Smith normal form ``P @ a @ Q = D``.

    Returns the list of diagonal entries (length ``min(rows, cols)``, each
    dividing the next, zeros last) and unimodular ``P`` (rows x rows) and
    ``Q`` (cols x cols).
    """
    m = len(a)
    n = len(a[0]) if m else 0
    A = [list(map(int, row)) for row in a]
    P = identity(m)
    Q = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        P[i], P[j] = P[j], P[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in Q:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, f):  # row_dst += f * row_src
        A[dst] = [x + f * y for x, y in zip(A[dst], A[src])]
        P[dst] = [x + f * y for x, y in zip(P[dst], P[src])]

    def add_col(src, dst, f):
        for row in A:
            row[dst] += f * row[src]
        for row in Q:
            row[dst] += f * row[src]

    t = 0
    while t < min(m, n):
        entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(t, i, -(A[i][t] // A[t][t]))
                    if A[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(t, j, -(A[t][j] // A[t][t]))
                    if A[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # divisibility: pivot must divide the remaining block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % A[t][t]), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            P[t] = [-x for x in P[t]]
        t += 1
    diag = [A[i][i] for i in range(min(m, n))]
    return diag, P, Q


def hermite_rows(rows: Sequence[Sequence[int]]) -> Matrix:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Zero rows are dropped; pivots are positive and entries above a pivot
    are reduced into ``[0, pivot)``. The result is a canonical basis.
    """
    A = [list(map(int, r)) for r in rows if any(r)]
    if not A:
        return []
    n = len(A[0])
    out: Matrix = []
    for c in range(n):
        nz = [r for r in A if r[c]]
        rest = [r for r in A if not r[c]]
        if not nz:
            continue
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[c]))
            p = nz[0]
            new = [p]
            for r in nz[1:]:
                q = r[c] // p[c]
                r = [x - q * y for x, y in zip(r, p)]
                if r[c]:
                    new.append(r)
                elif any(r):
                    rest.append(r)
            nz = new
        piv = nz[0]
        if piv[c] < 0:
            piv = [-x for x in piv]
        out.append(piv)
        A = rest
    for i, row in enumerate(out):
        c = next(k for k, x in enumerate(row) if x)
        for j in range(i):
            q = out[j][c] // row[c]
            out[j] = [x - q * y for x, y in zip(out[j], row)]
    return out
