"""The level-one action of the affine Hecke algebra of GL_m on XPoly.

Generators: adjacent swaps s_i, Hecke operators T_i and their inverses
(i taken mod m), the cyclic operator Pi and its inverse, and the
commuting family Y_1..Y_m.  All act exactly; T_i for 1 <= i <= m-1 uses
closed monomial formulas so no polynomial division ever happens, and
T_0 is the conjugate Pi T_{m-1} Pi^{-1}.
"""

from __future__ import annotations

from .qt import QTCoeff, qt_monomial, from_int
from .xring import XPoly, XError, swap_vars

_T = qt_monomial(1, 0, 1)          # t
_TINV = qt_monomial(1, 0, -1)      # t^-1
_TM1 = _T - 1                      # t - 1
_ONE_M_TINV = from_int(1) - _TINV  # 1 - t^-1


class HeckeError(ValueError):
    """Raised for bad operator indices or malformed operator words."""


def _acc(out, e, c):
    s = out.get(e)
    s = c if s is None else s + c
    if s.is_zero():
        out.pop(e, None)
    else:
        out[e] = s


def apply_s(i, f):
    """The reflection s_i.  For i = 0 mod m this is the affine reflection."""
    m = f.m
    i %= m
    if i:
        return swap_vars(f, i)
    # s_0: substitute X_1 -> q X_m, X_m -> q^{-1} X_1, then multiply by
    # q^{-1} X_1 X_m^{-1}.  On a monomial with exponents a this sends
    # (a_1, ..., a_m) to (a_m + 1, a_2, ..., a_{m-1}, a_1 - 1) with the
    # scalar q^{a_1 - a_m - 1}.
    out = {}
    for e, c in f.terms.items():
        a1, am = e[0], e[-1]
        ep = (am + 1,) + e[1:-1] + (a1 - 1,)
        qe = a1 - am - 1
        _acc(out, ep, c if qe == 0 else c * qt_monomial(1, qe, 0))
    return XPoly._raw(m, out)


def _t_pair(out, i, e, c, k, l):
    """Accumulate T_i applied to one monomial with X_i^k X_{i+1}^l."""
    base = e[:i - 1]
    rest = e[i + 1:]
    if l >= k:
        _acc(out, base + (l, k) + rest, c * _T)
        ctm = c * _TM1
        for a in range(k, l):
            _acc(out, base + (a, k + l - a) + rest, ctm)
    else:
        _acc(out, base + (l, k) + rest, c)
        ctm = c * _TM1
        for a in range(l + 1, k):
            _acc(out, base + (a, k + l - a) + rest, -ctm)


def _t_pair_inv(out, i, e, c, k, l):
    """Accumulate T_i^{-1} applied to one monomial with X_i^k X_{i+1}^l."""
    base = e[:i - 1]
    rest = e[i + 1:]
    if l > k:
        _acc(out, base + (l, k) + rest, c)
        ctm = c * _ONE_M_TINV
        for a in range(k + 1, l):
            _acc(out, base + (a, k + l - a) + rest, ctm)
    else:
        _acc(out, base + (l, k) + rest, c * _TINV)
        ctm = c * _ONE_M_TINV
        for a in range(l + 1, k + 1):
            _acc(out, base + (a, k + l - a) + rest, -ctm)


def apply_T(i, f):
    """The Hecke generator T_i (index mod m)."""
    m = f.m
    i %= m
    if i == 0:
        return apply_pi(apply_T(m - 1, apply_pi_inv(f)))
    out = {}
    for e, c in f.terms.items():
        _t_pair(out, i, e, c, e[i - 1], e[i])
    return XPoly._raw(m, out)


def apply_T_inv(i, f):
    """The inverse Hecke generator T_i^{-1} (index mod m)."""
    m = f.m
    i %= m
    if i == 0:
        return apply_pi(apply_T_inv(m - 1, apply_pi_inv(f)))
    out = {}
    for e, c in f.terms.items():
        _t_pair_inv(out, i, e, c, e[i - 1], e[i])
    return XPoly._raw(m, out)


def apply_pi(f):
    """Pi: F(X_1,...,X_m) -> X_1 F(X_2,...,X_m, X_{m+1})."""
    m = f.m
    out = {}
    for e, c in f.terms.items():
        am = e[-1]
        ep = (1 + am,) + e[:-1]
        _acc(out, ep, c if am == 0 else c * qt_monomial(1, -am, 0))
    return XPoly._raw(m, out)


def apply_pi_inv(f):
    """The inverse of Pi."""
    m = f.m
    out = {}
    for e, c in f.terms.items():
        b1 = e[0]
        ep = e[1:] + (b1 - 1,)
        qe = b1 - 1
        _acc(out, ep, c if qe == 0 else c * qt_monomial(1, qe, 0))
    return XPoly._raw(m, out)


def apply_Y(i, f):
    """Y_i = t^{m-i} T_{i-1}...T_1 Pi T_{m-1}^{-1}...T_i^{-1}."""
    m = f.m
    if not 1 <= i <= m:
        raise HeckeError("Y index %d out of range 1..%d" % (i, m))
    g = f
    for j in range(i, m):
        g = apply_T_inv(j, g)
    g = apply_pi(g)
    for j in range(1, i):
        g = apply_T(j, g)
    if i != m:
        g = g * qt_monomial(1, 0, m - i)
    return g


# ---------------------------------------------------------------------------
# Operator words
# ---------------------------------------------------------------------------

def apply_word(word, f):
    """Apply a sequence of atoms right-to-left (the last atom acts first).

    Atoms: ("T", i), ("Ti", i), ("P",), ("Pi",), ("Y", i), ("c", QTCoeff).
    """
    g = f
    for atom in reversed(word):
        kind = atom[0]
        if kind == "T":
            g = apply_T(atom[1], g)
        elif kind == "Ti":
            g = apply_T_inv(atom[1], g)
        elif kind == "P":
            g = apply_pi(g)
        elif kind == "Pi":
            g = apply_pi_inv(g)
        elif kind == "Y":
            g = apply_Y(atom[1], g)
        elif kind == "c":
            g = g * atom[1]
        else:
            raise HeckeError("unknown operator atom %r" % (atom,))
    return g


def parse_word(text, m):
    """Parse the CLI word syntax, e.g. "T3 Ti1 P Pi Y2"."""
    word = []
    for tok in text.split():
        if tok == "P":
            word.append(("P",))
        elif tok == "Pi":
            word.append(("Pi",))
        elif tok.startswith("Ti"):
            word.append(("Ti", _parse_idx(tok[2:], tok, m, True)))
        elif tok.startswith("T"):
            word.append(("T", _parse_idx(tok[1:], tok, m, True)))
        elif tok.startswith("Y"):
            word.append(("Y", _parse_idx(tok[1:], tok, m, False)))
        else:
            raise HeckeError("cannot parse operator token %r" % tok)
    return word


def _parse_idx(s, tok, m, mod_ok):
    try:
        i = int(s)
    except ValueError:
        raise HeckeError("cannot parse operator token %r" % tok) from None
    if mod_ok:
        if not 0 <= i < m:
            raise HeckeError("index in %r out of range 0..%d" % (tok, m - 1))
    elif not 1 <= i <= m:
        raise HeckeError("index in %r out of range 1..%d" % (tok, m))
    return i
