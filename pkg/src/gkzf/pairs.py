"""Standard-pair decomposition of monomial ideals and the induced triangulation."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .errors import FacetNotFullDim
from .exact import maximal_minor_gcd, rational_rank, span_contains, det_int
from .toric import InitialIdeal


@dataclass(frozen=True)
class StandardPair:
    """Pair (offset a, free index set sigma); offsets vanish on sigma."""

    offset: tuple[int, ...]
    free: frozenset[int]

    def sort_key(self):
        return (-len(self.free), tuple(sorted(self.free)), self.offset)

    def pattern(self):
        return (
            "("
            + ",".join(
                "*" if j in self.free else str(self.offset[j])
                for j in range(len(self.offset))
            )
            + ")"
        )


def _divides_off(gen, a, off):
    return all(gen[i] <= a[i] for i in off)


def standard_pairs(ideal, nvars=None):
    """The complete set of standard pairs of a monomial ideal.

    Accepts an InitialIdeal or a plain list of generator exponent tuples.
    Candidates are enumerated below the per-variable generator degrees and
    checked against the three defining conditions; the result is verified to
    reproduce the ideal through the intersection decomposition before being
    returned.
    """
    if isinstance(ideal, InitialIdeal):
        gens, nvars = list(ideal.generators), ideal.nvars
    else:
        gens = [tuple(g) for g in ideal]
        if nvars is None:
            if not gens:
                raise ValueError("need nvars for an empty generator list")
            nvars = len(gens[0])
    if any(not any(g) for g in gens):
        return ()  # unit ideal: no standard monomials at all
    bound = [max((g[i] for g in gens), default=0) for i in range(nvars)]

    out = []
    indices = list(range(nvars))
    for size in range(nvars + 1):
        for free in combinations(indices, size):
            free_set = frozenset(free)
            off = [i for i in indices if i not in free_set]
            for picks in product(*(range(max(bound[i], 1)) for i in off)):
                a = [0] * nvars
                for i, val in zip(off, picks):
                    a[i] = val
                a = tuple(a)
                # (2): no generator divides a off sigma
                if any(_divides_off(g, a, off) for g in gens):
                    continue
                # (3): each leftover direction reaches the ideal, with an
                # explicit witness monomial
                ok = True
                for l in off:
                    rest = [i for i in off if i != l]
                    wit = None
                    for g in gens:
                        if _divides_off(g, a, rest):
                            wit = g
                            break
                    if wit is None:
                        ok = False
                        break
                    e = tuple(
                        max(a[i], wit[i]) if (i in free_set or i == l) else a[i]
                        for i in indices
                    )
                    if not any(all(g[i] <= e[i] for i in indices) for g in gens):
                        raise AssertionError("witness monomial not in the ideal")
                if ok:
                    out.append(StandardPair(a, free_set))

    out.sort(key=StandardPair.sort_key)
    _verify_decomposition(gens, nvars, bound, out)
    return tuple(out)


def _verify_decomposition(gens, nvars, bound, pairs):
    """Check the intersection decomposition on a bounding box of monomials.

    Membership in the ideal must coincide with membership in every
    irreducible component <x_i^(a_i+1) : i off sigma> up to one past the
    generator degrees; failures beyond the box are impossible.
    """
    for e in product(*(range(b + 2) for b in bound)):
        in_ideal = any(all(g[i] <= e[i] for i in range(nvars)) for g in gens)
        in_all = all(
            any(e[i] >= p.offset[i] + 1 for i in range(nvars) if i not in p.free)
            for p in pairs
        )
        if in_ideal != in_all:
            raise AssertionError(
                f"standard pairs fail to reproduce the ideal at {e}"
            )


def top_pairs(pairs):
    if not pairs:
        return ()
    top = max(len(p.free) for p in pairs)
    return tuple(p for p in pairs if len(p.free) == top)


def embedded_pairs(pairs):
    if not pairs:
        return ()
    top = max(len(p.free) for p in pairs)
    return tuple(p for p in pairs if len(p.free) < top)


@dataclass(frozen=True)
class Triangulation:
    """Faces collected from standard pairs, with their two intersections.

    `common` intersects every face (including embedded ones); `core`
    intersects the inclusion-maximal faces only.
    """

    faces: tuple[tuple[int, ...], ...]
    facets: tuple[tuple[int, ...], ...]
    common: frozenset[int]
    core: frozenset[int]


def triangulation(pairs, config):
    """Face data of the triangulation induced by the standard pairs."""
    faces = sorted({tuple(sorted(p.free)) for p in pairs}, key=lambda f: (-len(f), f))
    face_sets = [frozenset(f) for f in faces]
    facets = [
        f
        for f, fs in zip(faces, face_sets)
        if not any(fs < other for other in face_sets)
    ]
    for f in faces:
        cols = config.columns(f)
        if cols and rational_rank(tuple(zip(*cols))) != len(f):
            raise AssertionError(f"face {f} has dependent columns")
    common = frozenset(range(config.n))
    for fs in face_sets:
        common &= fs
    core = frozenset(range(config.n))
    for f in facets:
        core &= frozenset(f)
    if not faces:
        common = frozenset()
        core = frozenset()
    return Triangulation(tuple(faces), tuple(facets), common, core)


def facet_volume(config, facet):
    """Normalized volume of a facet: gcd of the maximal minors of its columns."""
    cols = config.columns(facet)
    sub = [tuple(row[j] for j in facet) for row in config.reduced]
    if len(facet) == config.rank:
        return abs(det_int(tuple(sub)))
    return maximal_minor_gcd(tuple(sub))


def is_unimodular(tri, config):
    """True iff every facet has normalized volume one.

    Volumes are measured against the gcd of all maximal minors of the
    configuration.  FacetNotFullDim when a facet is smaller than the rank.
    """
    scale = maximal_minor_gcd(config.rows, config.rank)
    for facet in tri.facets:
        if len(facet) < config.rank:
            raise FacetNotFullDim(f"facet {facet} has size < rank {config.rank}")
        if facet_volume(config, facet) != scale:
            return False
    return True


def parameter_in_core(beta, tri, config):
    """True iff beta lies in the Q-span of the core columns."""
    cols = config.columns(sorted(tri.core))
    return span_contains(cols, tuple(beta))
