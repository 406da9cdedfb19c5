"""Multivariate polynomials over Q with weight-refined term orders.

Monomials are exponent tuples.  A Poly carries a Ring tag so that operands
from different variable families cannot be mixed silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import RingMismatch


@dataclass(frozen=True)
class Ring:
    tag: str
    nvars: int
    prefix: str = "x"
    suffix: str = ""

    def var_name(self, j):
        return f"{self.prefix}{j + 1}{self.suffix}"


def diff_ring(n):
    """Ring of the differentiation variables d1..dn."""
    return Ring("diff", n, "d")


def pert_ring(h):
    """Ring of the perturbation variables s1..sh."""
    return Ring("pert", h, "s")


def dual_ring(h):
    """Ring of operators ds1..dsh acting on the perturbation variables."""
    return Ring("dual", h, "ds")


def log_ring(n):
    """Ring of the logarithms log(x1)..log(xn)."""
    return Ring("log", n, "log(x", ")")


# ---------------------------------------------------------------------------
# monomials


def mono_one(n):
    return (0,) * n


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_quot(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def mono_degree(a):
    return sum(a)


@dataclass(frozen=True)
class WeightOrder:
    """Weight comparison refined by graded reverse lexicographic tie-break."""

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        # integer weights compare identically and avoid Fraction arithmetic
        # in the hot key path
        scale = 1
        for x in self.weights:
            d = Fraction(x).denominator
            g = gcd(scale, d)
            scale = scale // g * d
        object.__setattr__(
            self,
            "_int_weights",
            tuple(int(Fraction(x) * scale) for x in self.weights),
        )

    def key(self, m):
        iw = self._int_weights
        return (
            sum(a * b for a, b in zip(iw, m)),
            sum(m),
            tuple(-e for e in reversed(m)),
        )

    def compare(self, m1, m2):
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)

    def weight_of(self, m):
        return sum(a * b for a, b in zip(self.weights, m))


def grevlex(n):
    return WeightOrder((Fraction(0),) * n)


def weight_order(ws):
    return WeightOrder(tuple(Fraction(w) for w in ws))


def elimination_order(nvars):
    """Order eliminating the first variable (weight e1, grevlex tie-break)."""
    return WeightOrder((Fraction(1),) + (Fraction(0),) * (nvars - 1))


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        acc = {}
        for mono, c in items:
            c = c if isinstance(c, Fraction) else Fraction(c)
            if not c:
                continue
            cur = acc.get(mono)
            if cur is None:
                acc[mono] = c
            else:
                cur = cur + c
                if cur:
                    acc[mono] = cur
                else:
                    del acc[mono]
        self.ring = ring
        self.terms = acc

    # construction ---------------------------------------------------------

    @classmethod
    def zero(cls, ring):
        return cls(ring)

    @classmethod
    def const(cls, ring, c):
        return cls(ring, [(mono_one(ring.nvars), c)])

    @classmethod
    def variable(cls, ring, j, power=1):
        m = tuple(power if i == j else 0 for i in range(ring.nvars))
        return cls(ring, [(m, 1)])

    @classmethod
    def monomial(cls, ring, m, c=1):
        return cls(ring, [(m, c)])

    # predicates -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(m) for m in self.terms)

    def is_homogeneous(self):
        degs = {mono_degree(m) for m in self.terms}
        return len(degs) <= 1

    def total_degree(self):
        return max((mono_degree(m) for m in self.terms), default=0)

    def constant_term(self):
        return self.terms.get(mono_one(self.ring.nvars), Fraction(0))

    def coefficient(self, m):
        return self.terms.get(m, Fraction(0))

    # arithmetic -----------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring.tag} vs {other.ring.tag}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.ring, other)
        self._check(other)
        return Poly(self.ring, list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, [(m, -c) for m, c in self.terms.items()])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.ring, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(self.ring, [(m, c * other) for m, c in self.terms.items()])
        self._check(other)
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                acc[m] = acc.get(m, Fraction(0)) + c1 * c2
        return Poly(self.ring, acc)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (Fraction(1) / Fraction(scalar))

    def __pow__(self, k):
        out = Poly.const(self.ring, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # structure ------------------------------------------------------------

    def leading_monomial(self, order):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order):
        if self.is_zero():
            return self
        return self / self.leading_coefficient(order)

    def homogeneous_component(self, deg):
        return Poly(
            self.ring,
            [(m, c) for m, c in self.terms.items() if mono_degree(m) == deg],
        )

    def truncate(self, deg):
        """Drop terms of total degree above deg."""
        return Poly(
            self.ring,
            [(m, c) for m, c in self.terms.items() if mono_degree(m) <= deg],
        )

    def partial(self, j):
        acc = []
        for m, c in self.terms.items():
            if m[j]:
                dm = tuple(e - 1 if i == j else e for i, e in enumerate(m))
                acc.append((dm, c * m[j]))
        return Poly(self.ring, acc)

    def sorted_terms(self, order=None):
        order = order or grevlex(self.ring.nvars)
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # rendering ------------------------------------------------------------

    def render(self, order=None):
        if self.is_zero():
            return "0"
        pieces = []
        for m, c in self.sorted_terms(order):
            mono = "*".join(
                self.ring.var_name(j) + (f"^{e}" if e > 1 else "")
                for j, e in enumerate(m)
                if e
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("- " if c < 0 else "+ ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return f"Poly({self.ring.tag}: {self.render()})"


# ---------------------------------------------------------------------------
# division


def divide(f, divisors, order):
    """Multivariate division with remainder.

    Returns (quotients, remainder) with f = sum q_i g_i + r and no remainder
    term divisible by any divisor's leading monomial.  Deterministic given
    the term order and the divisor list order.
    """
    divisors = list(divisors)
    if not divisors:
        raise ValueError("need at least one divisor")
    for g in divisors:
        if g.ring != f.ring:
            raise RingMismatch(f"{g.ring.tag} vs {f.ring.tag}")
    lead = [
        (g.leading_monomial(order), g.leading_coefficient(order)) if not g.is_zero() else None
        for g in divisors
    ]
    work = dict(f.terms)
    quots = [{} for _ in divisors]
    rem = {}
    while work:
        m = max(work, key=order.key)
        c = work.pop(m)
        for i, info in enumerate(lead):
            if info is None:
                continue
            lm, lc = info
            if mono_divides(lm, m):
                q = mono_quot(m, lm)
                factor = c / lc
                qd = quots[i]
                qd[q] = qd.get(q, Fraction(0)) + factor
                for gm, gc in divisors[i].terms.items():
                    if gm == lm:
                        continue
                    t = mono_mul(q, gm)
                    nc = work.get(t, Fraction(0)) - factor * gc
                    if nc:
                        work[t] = nc
                    elif t in work:
                        del work[t]
                break
        else:
            rem[m] = c
    return [Poly(f.ring, q) for q in quots], Poly(f.ring, rem)


# ---------------------------------------------------------------------------
# affine-linear factors of series coefficients


@dataclass(frozen=True)
class LinearForm:
    """An affine-linear form const + lin·s, canonically scaled.

    Canonical means the first nonzero linear coefficient equals one, which
    makes proportional factors syntactically equal so they cancel exactly.
    """

    lin: tuple[Fraction, ...]
    const: Fraction

    @staticmethod
    def scaled(lin, const):
        """Canonicalize const + lin·s; returns (scalar, form).

        The form is None when the linear part vanishes (pure constant) and
        the scalar is then the constant itself.
        """
        lin = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in lin)
        const = const if isinstance(const, Fraction) else Fraction(const)
        for c in lin:
            if c:
                return c, LinearForm(tuple(x / c for x in lin), const / c)
        return const, None

    def to_poly(self, ring):
        terms = [(mono_one(ring.nvars), self.const)]
        for k, c in enumerate(self.lin):
            if c:
                m = tuple(1 if i == k else 0 for i in range(ring.nvars))
                terms.append((m, c))
        return Poly(ring, terms)

    def at_zero(self):
        return self.const
