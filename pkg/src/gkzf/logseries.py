"""Perturbed series coefficients, Frobenius solutions, and exact operator action.

A LogSeries is a truncated formal sum of terms x^(base+u) * p(log x) with
rational data throughout; operators act on it symbolically, so annihilation
statements are exact rather than numeric.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PoleAtOrigin
from .exact import solve_any
from .poly import LinearForm, Poly, log_ring, mono_degree, pert_ring
from .apolar import monomials_of_degree, multi_factorial


@dataclass(frozen=True)
class FactoredCoeff:
    """A series coefficient as scalar * prod(num) / prod(den) of affine forms.

    All stored forms are canonically scaled, so equal factors are
    syntactically equal; after construction the denominator carries no form
    vanishing at s = 0.
    """

    scalar: Fraction
    numerator: tuple[LinearForm, ...]
    denominator: tuple[LinearForm, ...]

    def at_zero(self):
        val = self.scalar
        for f in self.numerator:
            val *= f.const
        for f in self.denominator:
            val /= f.const
        return val


def _split(u):
    plus = tuple(max(x, 0) for x in u)
    minus = tuple(max(-x, 0) for x in u)
    return plus, minus


def shift_coefficient(v, basis, u, clearing_indices=()):
    """The coefficient of the lattice shift u in the perturbed series.

    Numerator factors come from the falling factorial of v+Bs at the
    negative part of u, denominator factors from v+Bs+u at the positive
    part.  The row forms over `clearing_indices` multiply into the
    numerator first, so they can cancel poles.  Proportional zero-constant
    factors cancel exactly; a surviving zero-constant denominator factor
    raises PoleAtOrigin.
    """
    v = tuple(Fraction(x) for x in v)
    plus, minus = _split(u)
    scalar = Fraction(1)
    num, den = [], []
    for j in sorted(clearing_indices):
        s, form = LinearForm.scaled(basis.row(j), 0)
        if form is None:
            raise AssertionError("clearing factor outside the basis support")
        scalar *= s
        num.append(form)
    for j, e in enumerate(minus):
        for t in range(e):
            s, form = LinearForm.scaled(basis.row(j), v[j] - t)
            if form is None:
                raise AssertionError("numerator factor outside the basis support")
            scalar *= s
            num.append(form)
    for j, e in enumerate(plus):
        for t in range(e):
            s, form = LinearForm.scaled(basis.row(j), v[j] + u[j] - t)
            if form is None:
                raise AssertionError("denominator factor outside the basis support")
            scalar /= s
            den.append(form)
    # cancel matching zero-constant factors
    for form in [f for f in num if not f.const]:
        if form in den:
            num.remove(form)
            den.remove(form)
    if any(not f.const for f in den):
        raise PoleAtOrigin(
            f"coefficient at shift {u} keeps a vanishing denominator factor"
        )
    return FactoredCoeff(scalar, tuple(num), tuple(den))


def taylor_polynomial(c, deg, ring=None):
    """Taylor polynomial of a factored coefficient to total degree deg.

    Numerator factors multiply in directly; each denominator factor is
    inverted by a truncated geometric series.  Exact throughout.
    """
    ring = ring or pert_ring(len(c.numerator[0].lin) if c.numerator else 0)
    out = Poly.const(ring, c.scalar)
    for f in c.numerator:
        out = (out * f.to_poly(ring)).truncate(deg)
    for f in c.denominator:
        lin = f.to_poly(ring) - f.const
        inv = Poly.zero(ring)
        power = Poly.const(ring, 1)
        for k in range(deg + 1):
            inv = inv + power * (Fraction(-1) ** k / f.const ** (k + 1))
            power = (power * lin).truncate(deg)
        out = (out * inv).truncate(deg)
    return out


@dataclass
class LogSeries:
    """Truncated series: sum over stored shifts u of x^(base+u) * poly(log x)."""

    base: tuple[Fraction, ...]
    terms: dict
    lam: object  # the log-variable ring

    def is_zero(self):
        return all(p.is_zero() for p in self.terms.values())

    def nonzero_terms(self):
        return {u: p for u, p in self.terms.items() if not p.is_zero()}

    def coefficient(self, u):
        p = self.terms.get(u)
        if p is None:
            return Poly.zero(self.lam)
        return p


def log_forms(basis, lam):
    """The logarithm combinations attached to the basis columns."""
    out = []
    for k in range(basis.h):
        vec = basis.vectors[k]
        out.append(
            Poly(
                lam,
                [
                    (tuple(1 if i == j else 0 for i in range(basis.n)), vec[j])
                    for j in range(basis.n)
                    if vec[j]
                ],
            )
        )
    return out


def frobenius_solutions(
    v,
    basis,
    series_lattice,
    duals,
    clearing_indices=(),
    skip_poles=False,
):
    """One truncated logarithmic series per dual operator.

    Each solution is the dual operator applied to the perturbed series
    (times the clearing factor over `clearing_indices`, folded into every
    coefficient before pole cancellation), evaluated at s = 0; the
    perturbation exponent expands through exp of the basis log-forms.
    Returns (solutions, skipped) where skipped lists shifts dropped because
    of poles; with skip_poles False a pole raises instead.
    """
    v = tuple(Fraction(x) for x in v)
    n = len(v)
    lam = log_ring(n)
    sring = pert_ring(basis.h)
    maxdeg = max((d.degree for d in duals), default=0)
    lforms = log_forms(basis, lam)

    # exp(sum_k s_k L_k) truncated: s-monomial a -> (prod_k L_k^a_k) / a!
    exp_part = {}
    for deg in range(maxdeg + 1):
        for alpha in monomials_of_degree(basis.h, deg):
            p = Poly.const(lam, Fraction(1, multi_factorial(alpha)))
            for k, e in enumerate(alpha):
                for _ in range(e):
                    p = p * lforms[k]
            exp_part[alpha] = p

    taylors = {}
    skipped = []
    for u in series_lattice:
        try:
            c = shift_coefficient(v, basis, u, clearing_indices)
        except PoleAtOrigin:
            if skip_poles:
                skipped.append(u)
                continue
            raise
        taylors[u] = taylor_polynomial(c, maxdeg, sring)

    solutions = []
    for d in duals:
        terms = {}
        for u, t in taylors.items():
            acc = Poly.zero(lam)
            for alpha, qc in d.poly.terms.items():
                weight = qc * multi_factorial(alpha)
                for alpha2, lpoly in exp_part.items():
                    if all(a2 <= a for a2, a in zip(alpha2, alpha)):
                        sc = t.coefficient(
                            tuple(a - a2 for a, a2 in zip(alpha, alpha2))
                        )
                        if sc:
                            acc = acc + lpoly * (weight * sc)
            if not acc.is_zero():
                terms[u] = acc
        solutions.append(LogSeries(tuple(v), terms, lam))
    return solutions, tuple(skipped)


# ---------------------------------------------------------------------------
# exact operator action


def apply_partial(series, j):
    """d/dx_j, acting exactly on every stored term."""
    base = series.base
    new_base = tuple(
        b - 1 if i == j else b for i, b in enumerate(base)
    )
    terms = {}
    for u, p in series.terms.items():
        c = base[j] + u[j]
        q = p * c + p.partial(j)
        if not q.is_zero():
            terms[u] = q
    return LogSeries(new_base, terms, series.lam)


def apply_monomial(series, exps):
    out = series
    for j, e in enumerate(exps):
        for _ in range(e):
            out = apply_partial(out, j)
    return out


def apply_binomial(series, g):
    """The toric operator d^(g+) - d^(g-), with both images on one base."""
    plus, minus = _split(g)
    sp = apply_monomial(series, plus)
    sm = apply_monomial(series, minus)
    terms = dict(sp.terms)
    for u, p in sm.terms.items():
        key = tuple(x + y for x, y in zip(u, g))
        q = terms.get(key)
        q = -p if q is None else q - p
        if q.is_zero():
            terms.pop(key, None)
        else:
            terms[key] = q
    return LogSeries(sp.base, terms, series.lam)


def apply_euler(series, row, beta_value):
    """The Euler operator sum_j row_j x_j d_j - beta_value."""
    beta_value = Fraction(beta_value)
    terms = {}
    for u, p in series.terms.items():
        scale = (
            sum(Fraction(r) * (b + x) for r, b, x in zip(row, series.base, u))
            - beta_value
        )
        q = p * scale
        for j, r in enumerate(row):
            if r:
                q = q + p.partial(j) * Fraction(r)
        if not q.is_zero():
            terms[u] = q
    return LogSeries(series.base, terms, series.lam)


def binomial_interior_residual(series, g, window_points):
    """Stored shifts where the toric-operator image must vanish, with values.

    A shift is interior when both of its preimages under the operator lie in
    the window; outside the interior the truncation legitimately leaks.
    """
    image = apply_binomial(series, g)
    window = set(window_points)
    residual = {}
    for u in window:
        pre = tuple(x - y for x, y in zip(u, g))
        if pre not in window:
            continue
        p = image.coefficient(u)
        if not p.is_zero():
            residual[u] = p
    return residual


def is_log_free(series):
    return all(p.is_constant() for p in series.terms.values())


def log_polys_in_span(series, basis):
    """Every stored log-polynomial rewrites as a polynomial in the basis log-forms."""
    lam = series.lam
    lforms = log_forms(basis, lam)
    for p in series.terms.values():
        for deg in range(p.total_degree() + 1):
            comp = p.homogeneous_component(deg)
            if comp.is_zero():
                continue
            candidates = []
            for alpha in monomials_of_degree(basis.h, deg):
                prod = Poly.const(lam, 1)
                for k, e in enumerate(alpha):
                    for _ in range(e):
                        prod = prod * lforms[k]
                candidates.append(prod)
            monos = sorted(
                {m for c in candidates for m in c.terms} | set(comp.terms),
                reverse=True,
            )
            cols = [[c.coefficient(m) for m in monos] for c in candidates]
            target = [comp.coefficient(m) for m in monos]
            if not cols:
                if any(target):
                    return False
                continue
            if solve_any(tuple(zip(*cols)), tuple(target)) is None:
                return False
    return True
