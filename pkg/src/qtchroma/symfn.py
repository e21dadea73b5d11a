"""Partitions, elementary symmetric polynomials, and e-basis expansions.

Partitions are plain tuples of weakly decreasing positive integers.
Everything iterates partitions in reverse-lexicographic order so output
is deterministic.
"""

from __future__ import annotations

from itertools import combinations

from .qt import QTCoeff, ONE, from_int, qt_monomial, render_coeff
from .xring import XPoly, is_symmetric


class SymFnError(ValueError):
    """Raised when an e-expansion precondition fails."""


def partitions_of(n):
    """All partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise SymFnError("cannot partition a negative integer")
    out = []

    def rec(rest, maxpart, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(rest, maxpart), 0, -1):
            prefix.append(p)
            rec(rest - p, p, prefix)
            prefix.pop()

    rec(n, n if n else 1, [])
    return out


def conjugate(lam):
    """The transposed partition."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def e_range(r, lo, hi, m):
    """e_r(X_lo, ..., X_hi) in m variables (1-based, inclusive bounds).

    Follows the usual conventions: 1 for r = 0, 0 for r < 0 or when the
    range holds fewer than r variables.
    """
    if r < 0:
        return XPoly.zero(m)
    if r == 0:
        return XPoly.one(m)
    idx = range(max(lo, 1) - 1, min(hi, m))
    if len(idx) < r:
        return XPoly.zero(m)
    terms = {}
    for comb in combinations(idx, r):
        e = [0] * m
        for j in comb:
            e[j] = 1
        terms[tuple(e)] = ONE
    return XPoly._raw(m, terms)


def e_poly(lam, m):
    """The product of elementary symmetric polynomials e_{lam_i}(X_1..X_m)."""
    out = XPoly.one(m)
    for part in lam:
        f = e_range(part, 1, m, m)
        if f.is_zero():
            return XPoly.zero(m)
        out = out * f
    return out


class EExpansion:
    """A symmetric function of degree n written in the elementary basis."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs=None):
        self.n = n
        self.coeffs = {}
        if coeffs:
            for lam, c in coeffs.items():
                lam = tuple(lam)
                if sum(lam) != n:
                    raise SymFnError("partition %r has weight %d, expected %d"
                                     % (lam, sum(lam), n))
                if isinstance(c, int):
                    c = from_int(c)
                if not c.is_zero():
                    self.coeffs[lam] = c

    def __eq__(self, other):
        if not isinstance(other, EExpansion):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def items(self):
        """(partition, coefficient) pairs in reverse-lexicographic order."""
        return [(lam, self.coeffs[lam]) for lam in sorted(self.coeffs, reverse=True)]

    def to_xpoly(self, m):
        out = XPoly.zero(m)
        for lam, c in self.coeffs.items():
            out = out + e_poly(lam, m) * c
        return out

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for lam, c in self.items():
            cs = render_coeff(c)
            body = "e[%s]" % ",".join(str(p) for p in lam)
            if cs == "1":
                parts.append(body)
            elif cs == "-1":
                parts.append("-" + body)
            else:
                parts.append("%s*%s" % (cs, body))
        out = parts[0]
        for p in parts[1:]:
            out += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
        return out

    def __repr__(self):
        return "EExpansion(n=%d, %s)" % (self.n, self)

    def to_json(self):
        return {
            "n": self.n,
            "coeffs": [{"partition": list(lam), "coeff": c.to_json()}
                       for lam, c in self.items()],
        }

    @classmethod
    def from_json(cls, obj):
        coeffs = {tuple(it["partition"]): QTCoeff.from_json(it["coeff"])
                  for it in obj["coeffs"]}
        return cls(obj["n"], coeffs)


def expand_in_e(f):
    """Expand a symmetric homogeneous polynomial in the elementary basis.

    Peels off leading monomials: under lex order the leading monomial of
    e_mu is X^{mu'} (the conjugate), so repeatedly subtracting the basis
    element whose conjugate matches the current lex-leading exponent
    pattern terminates without any division.
    """
    if f.is_zero():
        return EExpansion(0, {})
    if not f.is_homogeneous():
        raise SymFnError("polynomial is not homogeneous")
    if not f.is_polynomial():
        raise SymFnError("polynomial has negative exponents")
    n = f.degree()
    if f.m < n:
        raise SymFnError("need at least %d variables for a faithful degree-%d "
                         "e-expansion, got m=%d" % (n, n, f.m))
    if not is_symmetric(f):
        raise SymFnError("polynomial is not symmetric")
    coeffs = {}
    rem = f
    while rem.terms:
        lead = max(tuple(sorted(e, reverse=True)) for e in rem.terms)
        lam = tuple(p for p in lead if p)
        c = rem.terms[lead + (0,) * (f.m - len(lead))]
        mu = conjugate(lam)
        coeffs[mu] = coeffs.get(mu, ZERO_C) + c
        rem = rem - e_poly(mu, f.m) * c
    return EExpansion(n, coeffs)


ZERO_C = from_int(0)


def apply_N(exp):
    """Scale the coefficient of e_lam by t^{sum_i lam_i(lam_i-1)/2}."""
    out = {}
    for lam, c in exp.coeffs.items():
        k = sum(p * (p - 1) // 2 for p in lam)
        out[lam] = c * qt_monomial(1, 0, k) if k else c
    return EExpansion(exp.n, out)


def e_stat(lam):
    """The cross statistic sum_{i<j} lam_i lam_j."""
    total = sum(lam)
    return (total * total - sum(p * p for p in lam)) // 2
