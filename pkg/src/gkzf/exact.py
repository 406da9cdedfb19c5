"""Exact integer and rational linear algebra on tuples.

Vectors are tuples, matrices tuples of row tuples.  Integer routines stay in
int, rational ones in fractions.Fraction; nothing here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import ColumnRankDeficient, RankDeficient


def dot(a, b):
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def mat_vec(m, v):
    return tuple(dot(row, v) for row in m)


def transpose(m):
    if not m:
        return ()
    return tuple(zip(*m))


def identity_rows(k):
    return tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))


def xgcd(a, b):
    # Maintain x*a + y*b == g through the Euclidean algorithm.
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def hermite_normal_form(m):
    """Row-style Hermite normal form: returns (H, U) with H = U*m, U unimodular.

    Pivots are positive, entries above a pivot are reduced into [0, pivot),
    zero rows come last.  Fully deterministic.
    """
    rows = [list(r) for r in m]
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    u = [list(r) for r in identity_rows(nr)]

    def sub_row(i, q, k):
        if q:
            ri, rk = rows[i], rows[k]
            for j in range(nc):
                ri[j] -= q * rk[j]
            ui, uk = u[i], u[k]
            for j in range(nr):
                ui[j] -= q * uk[j]

    r = 0
    for c in range(nc):
        while True:
            nz = [i for i in range(r, nr) if rows[i][c]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(rows[i][c]), i))
            if i0 != r:
                rows[r], rows[i0] = rows[i0], rows[r]
                u[r], u[i0] = u[i0], u[r]
            if rows[r][c] < 0:
                rows[r] = [-x for x in rows[r]]
                u[r] = [-x for x in u[r]]
            lower = [i for i in range(r + 1, nr) if rows[i][c]]
            if not lower:
                break
            p = rows[r][c]
            for i in lower:
                sub_row(i, rows[i][c] // p, r)
        if any(rows[i][c] for i in range(r, nr)):
            p = rows[r][c]
            for i in range(r):
                sub_row(i, rows[i][c] // p, r)
            r += 1
    return tuple(tuple(x) for x in rows), tuple(tuple(x) for x in u)


def integer_rank(m):
    h, _ = hermite_normal_form(m)
    return sum(1 for row in h if any(row))


def lattice_rows(m):
    """Nonzero rows of the HNF of m: a canonical basis of the row lattice."""
    h, _ = hermite_normal_form(m)
    return tuple(row for row in h if any(row))


def kernel_basis(m, expected_rank=None):
    """Z-basis of {u : m·u = 0}, canonical via HNF.

    Raises RankDeficient when an expected rank is declared and the actual
    rank falls short.
    """
    n = len(m[0]) if m else 0
    h, u = hermite_normal_form(transpose(m))
    r = sum(1 for row in h if any(row))
    if expected_rank is not None and r < expected_rank:
        raise RankDeficient(f"rank {r} < declared {expected_rank}")
    ker = u[r:]
    if not ker:
        return ()
    return lattice_rows(ker)


def invariant_factors(m):
    """Nonzero diagonal of the Smith normal form of m."""
    work = [list(r) for r in m]
    nr = len(work)
    nc = len(work[0]) if nr else 0
    factors = []
    top = 0
    while True:
        entries = [
            (abs(work[i][j]), i, j)
            for i in range(top, nr)
            for j in range(top, nc)
            if work[i][j]
        ]
        if not entries:
            break
        _, pi, pj = min(entries)
        work[top], work[pi] = work[pi], work[top]
        for row in work:
            row[top], row[pj] = row[pj], row[top]
        while True:
            p = work[top][top]
            done = True
            for i in range(top + 1, nr):
                if work[i][top]:
                    q = work[i][top] // p
                    for j in range(top, nc):
                        work[i][j] -= q * work[top][j]
                    if work[i][top]:
                        work[top], work[i] = work[i], work[top]
                        done = False
                        break
            if not done:
                continue
            for j in range(top + 1, nc):
                if work[top][j]:
                    q = work[top][j] // p
                    for i in range(top, nr):
                        work[i][j] -= q * work[i][top]
                    if work[top][j]:
                        for i in range(top, nr):
                            work[i][top], work[i][j] = work[i][j], work[i][top]
                        done = False
                        break
            if done:
                break
        p = abs(work[top][top])
        # Absorb entries not divisible by the pivot, then retry this corner.
        bad = None
        for i in range(top + 1, nr):
            for j in range(top + 1, nc):
                if work[i][j] % p:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            for j in range(top, nc):
                work[top][j] += work[bad][j]
            continue
        factors.append(p)
        top += 1
    return factors


def is_primitive_lattice_basis(rows):
    """True when the rows span a rank-len(rows) direct summand of Z^n."""
    if not rows:
        return True
    facs = invariant_factors(rows)
    return len(facs) == len(rows) and all(f == 1 for f in facs)


def solve_linear(m, b):
    """Exact solution of m·x = b for a full-column-rank m; None if inconsistent.

    Raises ColumnRankDeficient when the columns are dependent.
    """
    nr = len(m)
    nc = len(m[0]) if nr else 0
    if len(b) != nr:
        raise ValueError("right-hand side length mismatch")
    rows = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(m)]
    piv_rows = []
    r = 0
    for c in range(nc):
        pivot = next((i for i in range(r, nr) if rows[i][c]), None)
        if pivot is None:
            raise ColumnRankDeficient(f"column {c + 1} is dependent on earlier columns")
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_rows.append(c)
        r += 1
    for i in range(r, nr):
        if rows[i][nc]:
            return None
    x = [Fraction(0)] * nc
    for i, c in enumerate(piv_rows):
        x[c] = rows[i][nc]
    return tuple(x)


def solve_any(m, b):
    """Some exact solution of m·x = b, or None; no rank requirements.

    Free variables are set to zero, so the result is deterministic.
    """
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rows = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(m)]
    pivots = []
    r = 0
    for c in range(nc):
        pivot = next((i for i in range(r, nr) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    for i in range(r, nr):
        if rows[i][nc]:
            return None
    x = [Fraction(0)] * nc
    for i, c in enumerate(pivots):
        x[c] = rows[i][nc]
    return tuple(x)


def rational_rank(m):
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rows = [[Fraction(x) for x in row] for row in m]
    r = 0
    for c in range(nc):
        pivot = next((i for i in range(r, nr) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(r + 1, nr):
            if rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def span_contains(columns, target):
    """True iff target lies in the Q-span of the given column vectors."""
    if not columns:
        return not any(target)
    m = tuple(zip(*columns))
    return solve_any(m, target) is not None


def det_int(m):
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def maximal_minor_gcd(m, rank=None):
    """gcd of the absolute values of all nonzero rank×rank minors."""
    r = integer_rank(m) if rank is None else rank
    if r == 0:
        return 0
    rows = lattice_rows(m)  # unimodular row ops preserve the gcd
    n = len(rows[0])
    g = 0
    for cols in combinations(range(n), r):
        sub = tuple(tuple(row[c] for c in cols) for row in rows)
        g = gcd(g, abs(det_int(sub)))
        if g == 1:
            return 1
    return g
