"""Homogeneous ideals in the perturbation variables and their apolar duals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DegreeCapReached
from .groebner import buchberger, ideal_equal
from .poly import Poly, dual_ring, grevlex, mono_degree, pert_ring


class HomIdeal:
    """Homogeneous ideal with a cached reduced basis for membership tests."""

    def __init__(self, ring, generators):
        gens = []
        for g in generators:
            if g.is_zero():
                continue
            if not g.is_homogeneous():
                raise ValueError(f"inhomogeneous generator {g.render()}")
            gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb = None

    def groebner(self):
        if self._gb is None:
            self._gb = buchberger(self.generators, grevlex(self.ring.nvars), ring=self.ring)
        return self._gb

    def contains(self, f):
        return self.groebner().contains(f)

    def equals(self, other):
        return ideal_equal(self.groebner(), other.groebner())

    def is_unit(self):
        return any(g.is_constant() for g in self.generators)


def product_of_rows(basis, index_set, ring=None):
    """(Bs)^J: the product of the basis row forms over an index set.

    Zero when the set leaves the support of the basis.
    """
    ring = ring or pert_ring(basis.h)
    out = Poly.const(ring, 1)
    for j in sorted(index_set):
        out = out * basis.row_form(j).to_poly(ring)
    return out


def shift_factor_ideal(basis, new_neg_sets):
    """Ideal generated by the row-form products over each basis shift's new negatives.

    Products over sets leaving the basis support vanish and are dropped.
    """
    ring = pert_ring(basis.h)
    gens = [product_of_rows(basis, negs, ring) for negs in new_neg_sets]
    return HomIdeal(ring, gens)


def support_pair_ideal(analysis, basis):
    """General-path ideal from confined/escaping support pairs, with the clearing factor.

    Generators are the row-form products over (I ∪ J) \\ K for confined I and
    escaping J; when nothing escapes, J is vacuous.  The clearing factor is
    the product over the base negatives outside K.
    """
    ring = pert_ring(basis.h)
    escaping = analysis.escaping if analysis.escaping else (frozenset(),)
    gens = []
    for i_set in analysis.confined:
        for j_set in escaping:
            gens.append(
                product_of_rows(basis, (i_set | j_set) - analysis.common, ring)
            )
    clearing = product_of_rows(basis, analysis.base_negs - analysis.common, ring)
    return HomIdeal(ring, gens), clearing


def monomials_of_degree(nvars, deg):
    """Exponent tuples of one degree, lexicographically descending."""
    if nvars == 0:
        return [()] if deg == 0 else []
    out = []

    def rec(prefix, rest, remaining):
        if rest == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), rest - 1, remaining - e)

    rec((), nvars, deg)
    return out


def multi_factorial(m):
    out = 1
    for e in m:
        out *= factorial(e)
    return out


def dual_pairing(q, f):
    """<q(d_s), f(s)> at s = 0: sum of q_a * a! * f_a over shared monomials."""
    total = Fraction(0)
    for m, c in q.terms.items():
        fc = f.terms.get(m)
        if fc:
            total += c * multi_factorial(m) * fc
    return total


@dataclass(frozen=True)
class DualOperator:
    """Constant-coefficient operator in the perturbation directions."""

    poly: Poly  # lives in the dual ring; exponents are differentiation orders
    degree: int

    def render(self):
        return self.poly.render()


def dual_basis(ideal, degree_cap):
    """Graded basis of the apolar dual of a homogeneous ideal.

    Degree by degree, the orthogonal complement of the ideal's graded piece
    under the factorial pairing is echelonized against the lexicographically
    descending monomial list.  Stops at the first degree where the quotient
    vanishes; DegreeCapReached if that never happens up to the cap.
    """
    ring = ideal.ring
    h = ring.nvars
    dring = dual_ring(h)
    out = []
    for k in range(degree_cap + 1):
        monos = monomials_of_degree(h, k)
        index = {m: i for i, m in enumerate(monos)}
        rows = []
        for gen in ideal.generators:
            dg = gen.total_degree()
            if dg > k:
                continue
            for mult in monomials_of_degree(h, k - dg):
                row = [Fraction(0)] * len(monos)
                for m, c in gen.terms.items():
                    row[index[tuple(a + b for a, b in zip(m, mult))]] = c
                rows.append(row)
        null = _nullspace(rows, len(monos))
        if not null:
            return out
        for vec in null:
            # factorial weights translate the pairing kernel into operator
            # coefficients
            terms = [
                (m, c / multi_factorial(m)) for m, c in zip(monos, vec) if c
            ]
            poly = Poly(dring, terms)
            lead = next(m for m in monos if poly.coefficient(m))
            poly = poly / poly.coefficient(lead)
            out.append(DualOperator(poly, k))
    raise DegreeCapReached(
        f"dual space still growing at degree {degree_cap}"
    )


def _nullspace(rows, ncols):
    """Canonical nullspace basis (RREF back-fill), columns in list order."""
    work = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][c]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        pv = work[r][c]
        work[r] = [x / pv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -work[i][fc]
        basis.append(vec)
    return basis


def dual_dimensions(duals):
    """Dual-space dimension per degree, as a tuple up to the top degree."""
    if not duals:
        return ()
    top = max(d.degree for d in duals)
    dims = [0] * (top + 1)
    for d in duals:
        dims[d.degree] += 1
    return tuple(dims)


def in_dual_span(operator, duals):
    """Membership of an operator in the span of dual-basis elements."""
    monos = sorted(
        {m for d in duals for m in d.poly.terms} | set(operator.terms),
        reverse=True,
    )
    if not duals:
        return operator.is_zero()
    cols = [[d.poly.coefficient(m) for m in monos] for d in duals]
    target = [operator.coefficient(m) for m in monos]
    from .exact import solve_any

    return solve_any(tuple(zip(*cols)), tuple(target)) is not None


def contract(u_poly, q):
    """Apply u as a differential operator to q, reread as an operator.

    Both arguments are operator polynomials over the same number of
    variables; the result is the star operation of the construction.
    """
    q_poly = q.poly if isinstance(q, DualOperator) else q
    ring = q_poly.ring
    acc = []
    for gm, gc in u_poly.terms.items():
        for qm, qc in q_poly.terms.items():
            if all(a <= b for a, b in zip(gm, qm)):
                coeff = gc * qc
                for a, b in zip(gm, qm):
                    for t in range(a):
                        coeff *= b - t
                acc.append((tuple(b - a for a, b in zip(gm, qm)), coeff))
    poly = Poly(ring, acc)
    return DualOperator(poly, poly.total_degree())


def as_dual(poly):
    """Reinterpret a perturbation-ring polynomial as an operator polynomial."""
    return Poly(dual_ring(poly.ring.nvars), list(poly.terms.items()))
