"""Fake exponents, negative supports, cone membership, and the perturbation basis."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from .errors import OrientationViolation, WindowTooSmall
from .exact import (
    is_primitive_lattice_basis,
    mat_vec,
    rational_rank,
    solve_linear,
    solve_any,
)
from .poly import LinearForm


@dataclass(frozen=True)
class FakeExponent:
    """Rational vector v with A·v = beta matching standard pairs off their free sets."""

    v: tuple[Fraction, ...]
    supporting: tuple
    multiplicity: int


def fake_exponents(config, beta, pairs):
    """All fake exponents of (A, beta) for the given standard pairs.

    Each pair contributes the unique v with v = offset off the free set and
    A_free·v_free = beta - A·offset, when that system is consistent.  Equal
    exponents arising from several pairs are merged; the multiplicity counts
    the supporting pairs.  Ordered by descending multiplicity, then by the
    first supporting pair.
    """
    beta = tuple(Fraction(b) for b in beta)
    if len(beta) != config.nrows:
        raise ValueError(f"beta length {len(beta)} != {config.nrows} rows")
    found = {}
    for pair in pairs:
        free = sorted(pair.free)
        rhs = tuple(
            b - x for b, x in zip(beta, mat_vec(config.rows, pair.offset))
        )
        if free:
            cols = tuple(zip(*config.columns(free)))
            sol = solve_linear(cols, rhs)
            if sol is None:
                continue
        else:
            if any(rhs):
                continue
            sol = ()
        v = list(Fraction(x) for x in pair.offset)
        for j, val in zip(free, sol):
            v[j] = val
        v = tuple(v)
        assert mat_vec(config.rows, v) == beta
        found.setdefault(v, []).append(pair)
    out = [
        FakeExponent(v, tuple(supp), len(supp)) for v, supp in found.items()
    ]
    out.sort(key=lambda fe: (-fe.multiplicity, fe.supporting[0].sort_key()))
    return tuple(out)


def negative_support(v):
    """Indices where the entry is a strictly negative integer."""
    out = []
    for j, x in enumerate(v):
        x = Fraction(x)
        if x.denominator == 1 and x < 0:
            out.append(j)
    return frozenset(out)


def pole_free_criterion(fe, tri):
    """True when the negative support sits inside the all-face intersection.

    In that case the support intersection equals the negative support itself
    and the perturbed series needs no clearing factor.
    """
    v = fe.v if isinstance(fe, FakeExponent) else fe
    return negative_support(v) <= tri.common


class ConeContext:
    """Memoized membership and decomposition over a fixed cone generator list.

    Weights are scaled to integers once; the search is exhaustive, so a None
    answer is a definitive non-membership certificate.  Failure states are
    shared across queries, which keeps window classification fast.
    """

    def __init__(self, generators, w):
        w = tuple(Fraction(x) for x in w)
        gens = [tuple(g) for g in generators]
        gw = [sum(a * b for a, b in zip(w, g)) for g in gens]
        if any(x <= 0 for x in gw):
            raise OrientationViolation("cone generator with nonpositive weight")
        scale = 1
        for x in w:
            scale = scale * x.denominator // gcd(scale, x.denominator)
        self.w_int = tuple(int(x * scale) for x in w)
        self.gens = gens
        self.gw = [int(x * scale) for x in gw]
        m = len(gens)
        n = len(gens[0]) if gens else 0
        # suffix tables: reachable coordinate signs and weight gcd from idx on
        self.can_inc = [[False] * n for _ in range(m + 1)]
        self.can_dec = [[False] * n for _ in range(m + 1)]
        self.wgcd = [0] * (m + 1)
        for idx in range(m - 1, -1, -1):
            g = gens[idx]
            for j in range(n):
                self.can_inc[idx][j] = self.can_inc[idx + 1][j] or g[j] > 0
                self.can_dec[idx][j] = self.can_dec[idx + 1][j] or g[j] < 0
            self.wgcd[idx] = gcd(self.wgcd[idx + 1], self.gw[idx])
        self.memo = {}

    def decompose(self, u):
        u = tuple(u)
        rem_w = sum(a * b for a, b in zip(self.w_int, u))
        if rem_w < 0:
            return None
        return self._rec(0, u, rem_w)

    def member(self, u):
        return self.decompose(u) is not None

    def _rec(self, idx, rem, rem_w):
        if rem_w == 0 and not any(rem):
            return ()
        m = len(self.gens)
        if idx == m:
            return None
        key = (idx, rem)
        hit = self.memo.get(key, False)
        if hit is not False:
            return hit
        tail = None
        if (self.wgcd[idx] == 0 and rem_w) or (
            self.wgcd[idx] and rem_w % self.wgcd[idx]
        ):
            pass
        elif any(
            (r > 0 and not self.can_inc[idx][j])
            or (r < 0 and not self.can_dec[idx][j])
            for j, r in enumerate(rem)
        ):
            pass
        else:
            g = self.gens[idx]
            gw = self.gw[idx]
            for x in range(rem_w // gw + 1):
                sub = self._rec(
                    idx + 1,
                    tuple(r - x * c for r, c in zip(rem, g)),
                    rem_w - x * gw,
                )
                if sub is not None:
                    tail = (x,) + sub
                    break
        self.memo[key] = tail
        return tail


def cone_decompose(u, generators, w):
    """Nonnegative integer coordinates expressing u over the cone generators.

    Exhaustive bounded search (every generator has positive weight), so None
    means u is definitively outside the cone.  The returned coordinate
    vector is the lexicographically first one in the generator order.
    """
    return ConeContext(generators, w).decompose(u)


@dataclass(frozen=True)
class PerturbBasis:
    """Lattice basis used to perturb an exponent, as columns of an n×h matrix."""

    vectors: tuple[tuple[int, ...], ...]
    fallback: bool
    nvars: int = 0

    def __post_init__(self):
        if self.vectors and not self.nvars:
            object.__setattr__(self, "nvars", len(self.vectors[0]))

    @property
    def h(self):
        return len(self.vectors)

    @property
    def n(self):
        return self.nvars

    def row(self, j):
        return tuple(Fraction(b[j]) for b in self.vectors)

    def row_form(self, j, const=0):
        return LinearForm(self.row(j), Fraction(const))

    def support(self):
        return frozenset(
            j for j in range(self.n) if any(b[j] for b in self.vectors)
        )

    def member_coordinates(self, u):
        """Integer coordinates of a lattice vector over the basis, or None."""
        if not self.vectors:
            return () if not any(u) else None
        sol = solve_any(tuple(zip(*self.vectors)), u)
        if sol is None or any(x.denominator != 1 for x in sol):
            return None
        return tuple(int(x) for x in sol)


def select_perturbation_basis(g_vectors, config, w):
    """A Z-basis of the kernel lattice drawn from the oriented basis vectors.

    Greedily discards every vector that is a nonnegative combination of the
    remaining ones (order-preserving, so the result is deterministic in the
    input order), then certifies the survivors as a primitive lattice basis
    of the right rank.  Falls back to the kernel basis when the certificate
    fails, with the flag set.
    """
    current = [tuple(g) for g in g_vectors]
    i = 0
    while i < len(current):
        others = current[:i] + current[i + 1 :]
        if others and cone_decompose(current[i], others, w) is not None:
            del current[i]
        else:
            i += 1
    expected = config.n - config.rank
    if len(current) == expected and is_primitive_lattice_basis(tuple(current)):
        return PerturbBasis(tuple(current), False, config.n)
    return PerturbBasis(config.kernel, True, config.n)


def lattice_window(basis, radius):
    """All kernel-lattice points with sup-norm at most radius, sorted.

    Enumerates integer coordinate boxes through an exact left inverse of the
    basis matrix, so the listing is complete.  Accepts a PerturbBasis or a
    plain list of vectors.
    """
    if isinstance(basis, PerturbBasis):
        vectors = [tuple(v) for v in basis.vectors]
        if not vectors:
            return ((0,) * basis.n,)
    else:
        vectors = [tuple(v) for v in basis]
        if not vectors:
            raise ValueError("empty vector list: wrap in a PerturbBasis")
    n = len(vectors[0])
    h = len(vectors)
    # rows of the n×h matrix B
    rows = [tuple(v[j] for v in vectors) for j in range(n)]
    # greedy full-rank row subset
    chosen = []
    for j in range(n):
        trial = chosen + [j]
        if rational_rank(tuple(rows[i] for i in trial)) == len(trial):
            chosen = trial
        if len(chosen) == h:
            break
    if len(chosen) < h:
        raise ValueError("basis vectors are linearly dependent")
    square = tuple(rows[i] for i in chosen)
    inv = _invert(square)
    out = []
    ranges = []
    for k in range(h):
        bound = sum(abs(x) for x in inv[k]) * radius
        ranges.append(range(-int(bound), int(bound) + 1))
    for z in product(*ranges):
        u = tuple(
            sum(v[j] * z[k] for k, v in enumerate(vectors)) for j in range(n)
        )
        if all(abs(x) <= radius for x in u):
            out.append(u)
    out.sort()
    return tuple(out)


def _invert(square):
    k = len(square)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(k)]
        for i, row in enumerate(square)
    ]
    for c in range(k):
        piv = next(i for i in range(c, k) if aug[i][c])
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(k):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[k:] for row in aug]


@dataclass(frozen=True)
class SupportAnalysis:
    """Window-certified negative-support data around one fake exponent.

    `new_neg_sets` lists, per oriented basis vector g, the indices turning
    into negative integers in v - g.  `confined` holds the negative supports
    all of whose representatives inside the check window lie in the cone;
    `escaping` holds those with a counterexample (a definitive exclusion).
    `common` is the intersection K: exact on the criterion path, otherwise
    the windowed intersection.  `series_lattice` is the window part of the
    series support L'.
    """

    base_negs: frozenset[int]
    new_neg_sets: tuple[frozenset[int], ...]
    confined: tuple[frozenset[int], ...]
    escaping: tuple[frozenset[int], ...]
    common: frozenset[int]
    common_windowed: frozenset[int]
    series_lattice: tuple[tuple[int, ...], ...]
    exact_common: bool
    window: int
    check_window: int


def support_analysis(v, basis, g_vectors, w, window, check_window, criterion):
    """Classify negative supports of v + u over a finite lattice window.

    Counterexamples found in the check window exclude a support for good;
    absence of counterexamples certifies it only within the window.  When
    the pole-free criterion holds, the support intersection is set exactly
    to the base negative support, independent of the windows.
    """
    if check_window < window:
        raise ValueError("check window smaller than the enumeration window")
    v = tuple(Fraction(x) for x in v)
    base = negative_support(v)
    new_neg_sets = tuple(
        negative_support(tuple(x - gj for x, gj in zip(v, g))) - base
        for g in g_vectors
    )
    win = lattice_window(basis, window)
    check = lattice_window(basis, check_window)
    cone = ConeContext(g_vectors, w) if g_vectors else None
    in_cone = cone.member if cone else (lambda u: not any(u))

    if g_vectors and not any(any(u) and in_cone(u) for u in win):
        raise WindowTooSmall(
            f"no cone member besides the origin within radius {window}"
        )

    classes = {}
    for u in check:
        negs = negative_support(tuple(x + du for x, du in zip(v, u)))
        classes.setdefault(negs, []).append(u)

    window_classes = sorted(
        {negative_support(tuple(x + du for x, du in zip(v, u))) for u in win},
        key=lambda s: (len(s), tuple(sorted(s))),
    )
    confined, escaping = [], []
    for negs in window_classes:
        if all(in_cone(u) for u in classes[negs]):
            confined.append(negs)
        else:
            escaping.append(negs)

    common_windowed = frozenset(range(len(v)))
    for negs in confined:
        common_windowed &= negs
    if not confined:
        common_windowed = base
    common = base if criterion else common_windowed

    lattice = tuple(
        u
        for u in win
        if negative_support(tuple(x + du for x, du in zip(v, u)))
        in set(confined)
    )
    return SupportAnalysis(
        base_negs=base,
        new_neg_sets=new_neg_sets,
        confined=tuple(confined),
        escaping=tuple(escaping),
        common=common,
        common_windowed=common_windowed,
        series_lattice=lattice,
        exact_common=bool(criterion),
        window=window,
        check_window=check_window,
    )


def default_window(g_vectors):
    """Twice the largest basis-vector entry, the recurrence-check radius."""
    big = max((abs(x) for g in g_vectors for x in g), default=1)
    return 2 * big


def default_check_window(g_vectors):
    big = max((abs(x) for g in g_vectors for x in g), default=1)
    return 3 * big
