"""Sparse multivariate Laurent polynomials over Z, used as a symbolic oracle.

A polynomial is a dict from exponent tuples (length n+m, dense) to nonzero
int coefficients, wrapped in an immutable value type.  Only the operations
needed for cluster exchange relations are provided: +, *, integer powers and
exact division (a NonLaurentError signals a failed exact division, which the
Laurent phenomenon rules out for valid seeds).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from .core import ExchangeMatrix, Grading


class NonLaurentError(ArithmeticError):
    """Exact division failed; input was not a valid cluster expression."""


class InhomogeneousError(ValueError):
    """Laurent polynomial is not homogeneous for the given grading."""


Expo = Tuple[int, ...]


def _add_expo(a: Expo, b: Expo) -> Expo:
    return tuple(x + y for x, y in zip(a, b))


def _sub_expo(a: Expo, b: Expo) -> Expo:
    return tuple(x - y for x, y in zip(a, b))


@dataclass(frozen=True)
class LaurentPoly:
    nvars: int
    terms: tuple  # sorted tuple of (expo, coeff), no zero coeffs

    # -- construction -----------------------------------------------------

    @classmethod
    def from_dict(cls, nvars: int, d: Dict[Expo, int]) -> "LaurentPoly":
        items = tuple(sorted((e, c) for e, c in d.items() if c != 0))
        return cls(nvars, items)

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, ())

    @classmethod
    def const(cls, nvars: int, c: int) -> "LaurentPoly":
        if c == 0:
            return cls.zero(nvars)
        return cls(nvars, (((0,) * nvars, int(c)),))

    @classmethod
    def variable(cls, nvars: int, i: int, power: int = 1) -> "LaurentPoly":
        """The generator x_i (1-based), possibly to a negative power."""
        e = tuple(power if t == i - 1 else 0 for t in range(nvars))
        return cls(nvars, ((e, 1),))

    @classmethod
    def generators(cls, nvars: int) -> tuple:
        return tuple(cls.variable(nvars, i) for i in range(1, nvars + 1))

    # -- ring structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        d = dict(self.terms)
        for e, c in other.terms:
            v = d.get(e, 0) + c
            if v:
                d[e] = v
            else:
                del d[e]
        return LaurentPoly.from_dict(self.nvars, d)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        d: Dict[Expo, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = _add_expo(e1, e2)
                v = d.get(e, 0) + c1 * c2
                if v:
                    d[e] = v
                else:
                    del d[e]
        return LaurentPoly.from_dict(self.nvars, d)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = LaurentPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def shift(self, e: Expo) -> "LaurentPoly":
        return LaurentPoly(self.nvars, tuple(sorted((_add_expo(t, e), c) for t, c in self.terms)))

    def min_exponents(self) -> Expo:
        return tuple(min(t[i] for t, _ in self.terms) for i in range(self.nvars))

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division self / other; raises NonLaurentError on remainder.

        Both operands are shifted to honest polynomials first, then reduced
        by leading-term division in lex order; for an exact quotient the
        leading term of the divisor always divides the current leading term.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return self
        sshift = self.min_exponents()
        oshift = other.min_exponents()
        f = dict(self.shift(tuple(-x for x in sshift)).terms)
        gterms = sorted(other.shift(tuple(-x for x in oshift)).terms, reverse=True)
        glead, gcoef = gterms[0]
        quo: Dict[Expo, int] = {}
        while f:
            flead = max(f)
            fcoef = f[flead]
            t = _sub_expo(flead, glead)
            if any(x < 0 for x in t) or fcoef % gcoef != 0:
                raise NonLaurentError("non-exact Laurent division")
            q = fcoef // gcoef
            quo[t] = q
            for e, c in gterms:
                e2 = _add_expo(e, t)
                v = f.get(e2, 0) - q * c
                if v:
                    f[e2] = v
                else:
                    del f[e2]
        result = LaurentPoly.from_dict(self.nvars, quo)
        return result.shift(_sub_expo(sshift, oshift))

    # -- evaluation / rendering ---------------------------------------------

    def evaluate(self, point):
        """Evaluate at a point of Fractions/ints; exact arithmetic."""
        total = 0
        for e, c in self.terms:
            v = c
            for x, p in zip(point, e):
                if p >= 0:
                    v *= x ** p
                else:
                    v /= x ** (-p)
            total += v
        return total

    def render(self, names=None) -> str:
        """Plain text like "2*x1^2*x3^-1 + x2"."""
        if not self.terms:
            return "0"
        names = names or ["x%d" % (i + 1) for i in range(self.nvars)]
        parts = []
        for e, c in sorted(self.terms, reverse=True):
            factors = ["%s^%d" % (names[i], p) if p != 1 else names[i]
                       for i, p in enumerate(e) if p != 0]
            if abs(c) != 1 or not factors:
                factors.insert(0, str(abs(c)))
            parts.append(("-" if c < 0 else "") + "*".join(factors))
        out = parts[0]
        for t in parts[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out


# ---------------------------------------------------------------------------
# exchange relations on symbolic clusters


def exchange_step(cluster: tuple, B: ExchangeMatrix, k: int) -> LaurentPoly:
    """New cluster variable from mutating a symbolic cluster at direction k.

    cluster holds all n+m current variables expressed in the initial ones
    (the last m entries are usually the pure frozen generators).  Returns
    (prod_{b_ik>0} cluster_i^{b_ik} + prod_{b_ik<0} cluster_i^{-b_ik}) / cluster_k.
    """
    k0 = B.check_direction(k)
    nvars = cluster[0].nvars
    mplus = LaurentPoly.const(nvars, 1)
    mminus = LaurentPoly.const(nvars, 1)
    for i in range(B.size):
        bik = B.rows[i][k0]
        if bik > 0:
            mplus = mplus * cluster[i] ** bik
        elif bik < 0:
            mminus = mminus * cluster[i] ** (-bik)
    return (mplus + mminus).exact_div(cluster[k0])


def mutate_cluster(cluster: tuple, B: ExchangeMatrix, k: int) -> tuple:
    new = exchange_step(cluster, B, k)
    k0 = k - 1
    return cluster[:k0] + (new,) + cluster[k0 + 1:]


def apply_path_symbolic(B: ExchangeMatrix, path) -> tuple:
    """Apply a mutation path to the initial symbolic cluster of B.

    Returns (cluster, matrix) after the path; cluster has n+m entries.
    """
    from .core import as_path
    cluster = LaurentPoly.generators(B.size)
    cur = B
    for k in as_path(path).applications():
        cluster = mutate_cluster(cluster, cur, k)
        cur = cur.mutate(k)
    return cluster, cur


def denominator_of(v: LaurentPoly, n: int) -> tuple:
    """Denominator vector over the first n (mutable) variables."""
    if v.is_zero():
        raise ValueError("zero has no denominator vector")
    return tuple(-min(e[i] for e, _ in v.terms) for i in range(n))


def degree_of(v: LaurentPoly, g: Grading) -> tuple:
    """Common degree of all terms of v under g; r-tuple.

    Raises InhomogeneousError if two terms disagree.
    """
    if v.is_zero():
        raise ValueError("zero has no well-defined degree")
    degs = None
    for e, _ in v.terms:
        d = tuple(sum(ge * xe for ge, xe in zip(grow, e)) for grow in g.rows)
        if degs is None:
            degs = d
        elif degs != d:
            raise InhomogeneousError("terms of degrees %s and %s" % (degs, d))
    return degs
