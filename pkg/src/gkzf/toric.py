"""Configuration matrices, their toric ideals, and weighted initial ideals."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import HomogeneityViolation, NonGenericWeight, RankDeficient
from .exact import (
    integer_rank,
    kernel_basis,
    lattice_rows,
    mat_vec,
    solve_any,
    transpose,
)
from .groebner import GroebnerBasis, buchberger, saturate_by_variables
from .poly import Poly, diff_ring, grevlex, weight_order


@dataclass(frozen=True)
class ConfigMatrix:
    """Integer configuration A with its kernel lattice and rank data.

    Redundant rows are allowed; `rank` is the effective dimension d and
    `reduced` holds rank-many rows spanning the same row space over Z, used
    for volume computations.
    """

    rows: tuple[tuple[int, ...], ...]
    rank: int
    kernel: tuple[tuple[int, ...], ...]
    hyperplane: tuple[Fraction, ...] | None
    reduced: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows, declared_rank=None):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise ValueError("ragged matrix")
        r = integer_rank(rows)
        if declared_rank is not None and r < declared_rank:
            raise RankDeficient(f"rank {r} < declared {declared_rank}")
        ker = kernel_basis(rows)
        # c with c·a_j = 1 for every column, when the columns admit one.
        ones = (Fraction(1),) * n
        cert = solve_any(transpose(rows), ones)
        return cls(rows, r, ker, cert, lattice_rows(rows))

    @property
    def n(self):
        return len(self.rows[0])

    @property
    def nrows(self):
        return len(self.rows)

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def columns(self, js):
        return [self.column(j) for j in js]


@dataclass(frozen=True)
class OrientedBinomial:
    """A Groebner binomial d^plus - d^minus with w·plus > w·minus."""

    vector: tuple[int, ...]
    plus: tuple[int, ...]
    minus: tuple[int, ...]

    def poly(self, ring):
        return Poly(ring, [(self.plus, 1), (self.minus, -1)])


@dataclass(frozen=True)
class InitialIdeal:
    """Minimal monomial generators of a weighted initial ideal."""

    generators: tuple[tuple[int, ...], ...]
    nvars: int


def _split(u):
    plus = tuple(max(x, 0) for x in u)
    minus = tuple(max(-x, 0) for x in u)
    return plus, minus


@lru_cache(maxsize=None)
def toric_ideal(config):
    """Reduced grevlex basis of the toric ideal of the configuration.

    Realized as the saturation of the kernel-lattice binomial ideal by the
    product of all variables.  Warns when no hyperplane certificate exists:
    the computation proceeds but the homogeneity-based guarantees are void.
    """
    if config.hyperplane is None:
        warnings.warn(
            "columns do not lie on a common hyperplane off the origin",
            HomogeneityViolation,
            stacklevel=2,
        )
    ring = diff_ring(config.n)
    order = grevlex(config.n)
    if not config.kernel:
        return GroebnerBasis((), order, ring)
    gens = []
    for u in config.kernel:
        plus, minus = _split(u)
        gens.append(Poly(ring, [(plus, 1), (minus, -1)]))
    sat = saturate_by_variables(gens)
    return buchberger(sat, order, ring=ring)


def initial_data(config, w):
    """Initial ideal and oriented basis binomials for a generic weight.

    Recomputes the reduced basis of the toric ideal under the weight order,
    orients every binomial so the heavier monomial leads, and extracts the
    minimal monomial generators.  NonGenericWeight when any basis binomial
    is weight-tied.
    """
    w = tuple(Fraction(x) for x in w)
    if len(w) != config.n:
        raise ValueError(f"weight length {len(w)} != {config.n} variables")
    base = toric_ideal(config)
    # A nonnegative shift keeps the order global; for homogeneous ideals the
    # initial ideal is unchanged.
    shift = min(w)
    effective = tuple(x - shift for x in w) if shift < 0 else w
    gb = buchberger(base.generators, weight_order(effective), ring=base.ring)
    order = gb.order
    binomials = []
    for g in gb.generators:
        terms = g.sorted_terms(order)
        if len(terms) != 2:
            raise AssertionError("toric basis element is not a binomial")
        (m1, c1), (m2, c2) = terms
        if {c1, c2} != {Fraction(1), Fraction(-1)}:
            raise AssertionError("toric binomial with non-unit coefficients")
        w1 = sum(a * b for a, b in zip(w, m1))
        w2 = sum(a * b for a, b in zip(w, m2))
        if w1 == w2:
            raise NonGenericWeight(
                f"weight tie on {g.render(order)}: both monomials weigh {w1}"
            )
        plus, minus = (m1, m2) if w1 > w2 else (m2, m1)
        lead_coeff = c1 if w1 > w2 else c2
        if lead_coeff != 1:
            # reduced basis elements are monic in the leading monomial
            raise AssertionError("oriented binomial has leading coefficient != 1")
        if any(p and q for p, q in zip(plus, minus)):
            raise AssertionError("saturated toric binomial with common factor")
        vector = tuple(p - q for p, q in zip(plus, minus))
        if any(mat_vec(config.rows, vector)):
            raise AssertionError("binomial vector outside the kernel lattice")
        binomials.append(OrientedBinomial(vector, plus, minus))
    binomials.sort(key=lambda b: order.key(b.plus))
    gens = tuple(b.plus for b in binomials)
    for i, m in enumerate(gens):
        for j, other in enumerate(gens):
            if i != j and all(x <= y for x, y in zip(other, m)):
                raise AssertionError("initial ideal generators not minimal")
    return InitialIdeal(gens, config.n), tuple(binomials)
