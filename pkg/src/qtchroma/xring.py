"""Laurent polynomials in X_1..X_m with coefficients in Q(q,t).

The ring carries the index convention X_{i+km} = q^{-k} X_i, so any
out-of-range variable index folds back into 1..m with a power of q
(see resolve_index).  Exponent vectors are stored dense (m is small),
term maps are sparse.
"""

from __future__ import annotations

from .qt import QTCoeff, ZERO, ONE, from_int, render_coeff


class XError(ValueError):
    """Raised for malformed or incompatible X-polynomial operations."""


class XPoly:
    """Sparse Laurent polynomial in m variables over Q(q,t).

    terms maps a length-m integer exponent tuple to a nonzero QTCoeff.
    """

    __slots__ = ("m", "terms")

    def __init__(self, m, terms=None):
        if m < 1:
            raise XError("need at least one variable, got m=%d" % m)
        self.m = m
        self.terms = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != m:
                    raise XError("exponent vector %r has length %d, expected %d"
                                 % (exps, len(exps), m))
                if isinstance(c, int):
                    c = from_int(c)
                if not c.is_zero():
                    self.terms[tuple(exps)] = c

    @classmethod
    def _raw(cls, m, terms):
        # Internal: terms already pruned and well-formed; no copy.
        self = cls.__new__(cls)
        self.m = m
        self.terms = terms
        return self

    @classmethod
    def zero(cls, m):
        return cls._raw(m, {})

    @classmethod
    def one(cls, m):
        return cls._raw(m, {(0,) * m: ONE})

    @classmethod
    def variable(cls, i, m):
        """X_i, with i folded into 1..m via the q-twist."""
        i0, qpow = resolve_index(i, m)
        exps = [0] * m
        exps[i0 - 1] = 1
        c = ONE if qpow == 0 else QTCoeff({(qpow, 0): 1})
        return cls._raw(m, {tuple(exps): c})

    @classmethod
    def monomial(cls, m, exps, coeff=None):
        if coeff is None:
            coeff = ONE
        if isinstance(coeff, int):
            coeff = from_int(coeff)
        if coeff.is_zero():
            return cls.zero(m)
        if len(exps) != m:
            raise XError("exponent vector length %d != m=%d" % (len(exps), m))
        return cls._raw(m, {tuple(exps): coeff})

    # -- predicates -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = XPoly(self.m, {(0,) * self.m: other})
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def degree(self):
        """Total degree (max over terms); None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def is_polynomial(self):
        return all(min(e) >= 0 for e in self.terms)

    # -- arithmetic -----------------------------------------------------

    def _check(self, other):
        if self.m != other.m:
            raise XError("variable counts differ: %d vs %d" % (self.m, other.m))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return XPoly._raw(self.m, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = -c if s is None else s - c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return XPoly._raw(self.m, out)

    def __neg__(self):
        return XPoly._raw(self.m, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, QTCoeff)):
            return self.scale(other)
        self._check(other)
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                c = ca * cb
                s = out.get(e)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return XPoly._raw(self.m, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        if isinstance(c, int):
            c = from_int(c)
        if c.is_zero():
            return XPoly.zero(self.m)
        return XPoly._raw(self.m, {e: k * c for e, k in self.terms.items()})

    # -- rendering / serialization ---------------------------------------

    def __str__(self):
        return render_xpoly(self)

    def __repr__(self):
        return "XPoly(m=%d, %s)" % (self.m, render_xpoly(self))

    def to_json(self):
        return {
            "m": self.m,
            "terms": [{"exp": list(e), "coeff": c.to_json()}
                      for e, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, obj):
        terms = {tuple(t["exp"]): QTCoeff.from_json(t["coeff"]) for t in obj["terms"]}
        return cls(obj["m"], terms)


def resolve_index(i, m):
    """Fold a variable index into range: X_i = q^qpow * X_i0 with 1 <= i0 <= m.

    Returns (i0, qpow) where i = i0 + k*m and qpow = -k.
    """
    k, i0 = divmod(i - 1, m)
    return i0 + 1, -k


def truncate(f, mp):
    """Set X_i = 0 for mp < i <= f.m; the result lives in mp variables."""
    if not (0 < mp < f.m):
        raise XError("truncation target must satisfy 0 < m' < m, got %d" % mp)
    out = {}
    for e, c in f.terms.items():
        tail = e[mp:]
        if any(x < 0 for x in tail):
            raise XError("cannot truncate: negative exponent on X_%d"
                         % (mp + 1 + [x < 0 for x in tail].index(True)))
        if any(tail):
            continue
        out[e[:mp]] = c
    return XPoly._raw(mp, out)


def swap_vars(f, i):
    """Exchange X_i and X_{i+1} (1 <= i <= m-1)."""
    out = {}
    for e, c in f.terms.items():
        if e[i - 1] != e[i]:
            e = e[:i - 1] + (e[i], e[i - 1]) + e[i + 1:]
        out[e] = c
    return XPoly._raw(f.m, out)


def is_symmetric(f):
    """True iff f is invariant under all adjacent swaps of X_1..X_m."""
    for i in range(1, f.m):
        for e, c in f.terms.items():
            if e[i - 1] == e[i]:
                continue
            ep = e[:i - 1] + (e[i], e[i - 1]) + e[i + 1:]
            if f.terms.get(ep) != c:
                return False
    return True


def assert_integral(f):
    """True iff every coefficient lies in Z[q^{-1}, t^{+-1}]."""
    for c in f.terms.values():
        if c.den.terms != {(0, 0): 1}:
            return False
        if any(qe > 0 for qe, _ in c.num.terms):
            return False
    return True


# Alias with the predicate-style name.
is_integral = assert_integral


# ---------------------------------------------------------------------------
# Text rendering
# ---------------------------------------------------------------------------

def _render_xterm(e, c):
    vars_ = []
    for j, a in enumerate(e):
        if a == 1:
            vars_.append("X%d" % (j + 1))
        elif a:
            vars_.append("X%d^%d" % (j + 1, a))
    body = "*".join(vars_)
    if not body:
        return render_coeff(c)
    cs = render_coeff(c)
    if cs == "1":
        return body
    if cs == "-1":
        return "-" + body
    if len(c.num.terms) > 1 and c.den.terms == {(0, 0): 1}:
        cs = "(%s)" % cs if not cs.startswith("(") else cs
    return "%s*%s" % (cs, body)


def render_xpoly(f):
    """Canonical text form, terms in descending lex order of exponents."""
    if not f.terms:
        return "0"
    parts = [_render_xterm(e, f.terms[e]) for e in sorted(f.terms, reverse=True)]
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out
