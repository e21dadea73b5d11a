"""The Y-to-X transport map, its inverse on symmetric inputs, and the
quantum product.

A Y-polynomial is an XPoly whose variables are read as the commuting
operators Y_1..Y_m; the transport map evaluates the operator on 1.
Its inverse is computed only on the symmetric subspace via an exact
linear solve in e-basis coordinates.  The quantum product of f and g
pulls f back to a Y-polynomial and applies it to g as an operator,
which avoids ever inverting g.
"""

from __future__ import annotations

from itertools import combinations

from .qt import QTCoeff, ZERO, ONE, from_int, qt_monomial
from .xring import XPoly, XError, is_symmetric
from .hecke import apply_Y, apply_T, apply_pi
from .symfn import EExpansion, SymFnError, partitions_of, e_poly, e_range, expand_in_e
from .qt import t_int


class QMapError(ValueError):
    """Raised when an inverse transport or quantum product is ill-posed."""


# Images of Y-monomials acting on 1, keyed by (m, exponent tuple).
_YMONO_CACHE = {}

# Images of elementary products e_lam(Y) . 1, keyed by (m, lam).
_E_IMAGE_CACHE = {}


def _y_image(m, exps):
    """The operator monomial Y^exps applied to 1, memoized."""
    key = (m, exps)
    cached = _YMONO_CACHE.get(key)
    if cached is not None:
        return cached
    for i in range(m):
        if exps[i]:
            sub = exps[:i] + (exps[i] - 1,) + exps[i + 1:]
            img = apply_Y(i + 1, _y_image(m, sub))
            break
    else:
        img = XPoly.one(m)
    _YMONO_CACHE[key] = img
    return img


def q_map(f):
    """Evaluate a Y-polynomial on 1, extending monomial images linearly."""
    if not f.is_polynomial():
        raise QMapError("transport map needs a polynomial Y-input")
    out = XPoly.zero(f.m)
    for e, c in f.terms.items():
        out = out + _y_image(f.m, e) * c
    return out


def q_map_e(lam, m):
    """The image of the elementary product e_lam(Y), memoized."""
    key = (m, tuple(lam))
    cached = _E_IMAGE_CACHE.get(key)
    if cached is None:
        cached = q_map(e_poly(lam, m))
        _E_IMAGE_CACHE[key] = cached
    return cached


def _solve(matrix, rhs):
    """Exact Gaussian elimination; matrix is a list of rows of QTCoeff."""
    nrow = len(matrix)
    ncol = len(matrix[0]) if nrow else 0
    aug = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    piv_cols = []
    r = 0
    for col in range(ncol):
        piv = next((i for i in range(r, nrow) if not aug[i][col].is_zero()), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = aug[r][col].inverse()
        aug[r] = [v * inv for v in aug[r]]
        for i in range(nrow):
            if i != r and not aug[i][col].is_zero():
                fac = aug[i][col]
                aug[i] = [a - fac * b for a, b in zip(aug[i], aug[r])]
        piv_cols.append(col)
        r += 1
        if r == nrow:
            break
    if len(piv_cols) < ncol:
        raise QMapError("singular transport system; increase the variable count")
    for i in range(r, nrow):
        if not aug[i][ncol].is_zero():
            raise QMapError("inconsistent transport system")
    sol = [ZERO] * ncol
    for i, col in enumerate(piv_cols):
        sol[col] = aug[i][ncol]
    return sol


def q_map_inv_sym(f):
    """Coordinates of f in the transported elementary basis.

    Returns the unique EExpansion c with sum_lam c_lam * q_map_e(lam)
    equal to f.  Needs f symmetric homogeneous with enough variables
    (m >= 2*degree) so the images stay linearly independent.
    """
    if f.is_zero():
        return EExpansion(0, {})
    if not f.is_homogeneous():
        raise QMapError("input is not homogeneous")
    d = f.degree()
    if d == 0:
        return EExpansion(0, {(): next(iter(f.terms.values()))})
    if f.m < 2 * d:
        raise QMapError("need m >= %d variables to invert at degree %d, got %d"
                        % (2 * d, d, f.m))
    if not is_symmetric(f):
        raise QMapError("input is not symmetric")
    lams = partitions_of(d)
    mus = lams  # row index set: e-coordinates of X-side expansions
    cols = []
    for lam in lams:
        col = expand_in_e(q_map_e(lam, f.m)).coeffs
        cols.append([col.get(mu, ZERO) for mu in mus])
    target = expand_in_e(f).coeffs
    rhs = [target.get(mu, ZERO) for mu in mus]
    matrix = [[cols[j][i] for j in range(len(lams))] for i in range(len(mus))]
    sol = _solve(matrix, rhs)
    return EExpansion(d, {lam: c for lam, c in zip(lams, sol) if not c.is_zero()})


def apply_e_r_Y(r, g):
    """Apply the operator e_r(Y_1..Y_m) to g.

    Sums Y_I . g over all r-element index sets I, sharing common
    prefixes of the nested applications.
    """
    m = g.m
    if r < 0 or r > m:
        return XPoly.zero(m)
    if r == 0:
        return g
    total = [XPoly.zero(m)]

    def rec(start, left, h):
        if left == 0:
            total[0] = total[0] + h
            return
        # Y_i for i in start..m, keeping room for the remaining picks.
        for i in range(start, m - left + 2):
            rec(i + 1, left - 1, apply_Y(i, h))

    rec(1, r, g)
    return total[0]


def apply_ypoly_sym(coords, g):
    """Apply sum_lam c_lam e_lam(Y) to g, given e-coordinates."""
    out = XPoly.zero(g.m)
    for lam, c in coords.coeffs.items():
        h = g
        for part in lam:
            h = apply_e_r_Y(part, h)
        out = out + h * c
    return out


def star(f, g):
    """The quantum product of two symmetric homogeneous polynomials."""
    if f.m != g.m:
        raise XError("variable counts differ: %d vs %d" % (f.m, g.m))
    if f.is_zero() or g.is_zero():
        return XPoly.zero(f.m)
    df, dg = f.degree(), g.degree()
    if f.m < 2 * (df + dg):
        raise QMapError("need m >= %d variables for degrees %d and %d"
                        % (2 * (df + dg), df, dg))
    return apply_ypoly_sym(q_map_inv_sym(f), g)


def qt_elementary(lam, m):
    """The iterated quantum product of elementaries along lam.

    Computed two ways -- the iterated product and the transported
    e_lam(Y) rescaled by t^{-sum lam_i(lam_i-1)/2} -- and cross-checked.
    """
    lam = tuple(sorted(lam, reverse=True))
    n = sum(lam)
    if m < 2 * n:
        raise QMapError("need m >= %d variables for weight %d" % (2 * n, n))
    out = XPoly.one(m)
    for part in reversed(lam):
        out = star(e_range(part, 1, m, m), out)
    k = sum(p * (p - 1) // 2 for p in lam)
    direct = q_map_e(lam, m) * qt_monomial(1, 0, -k)
    if out != direct:
        raise QMapError("the two evaluation routes disagree for %r" % (lam,))
    return out


def pieri_rhs(r, m):
    """Closed form for the quantum product of e_1 with e_r."""
    one_m_qinv = from_int(1) - qt_monomial(1, -1, 0)
    qinv = qt_monomial(1, -1, 0)
    return (e_range(r + 1, 1, m, m) * (one_m_qinv * t_int(r + 1))
            + e_range(1, 1, m, m) * e_range(r, 1, m, m) * qinv)


def check_pieri(r, m):
    """Verify the rank-one Pieri rule and its partial-sum refinement.

    For each 1 <= a <= m the partial sum of operator words applied to
    e_r must match the two-sum closed form in split elementary
    polynomials; a = m recovers the product rule itself.
    """
    if r < 0:
        raise QMapError("need r >= 0")
    if m < 2 * (r + 1):
        raise QMapError("need m >= %d" % (2 * (r + 1)))
    er = e_range(r, 1, m, m)
    one_m_qinv = from_int(1) - qt_monomial(1, -1, 0)
    qinv = qt_monomial(1, -1, 0)
    # Left side built incrementally: word_a = T_{a-1} ... T_1 Pi . e_r.
    word = apply_pi(er)
    total = word
    for a in range(1, m + 1):
        rhs = XPoly.zero(m)
        for k in range(1, a + 1):
            rhs = rhs + e_range(k, 1, a, m) * e_range(r - k + 1, a + 1, m, m) * t_int(k)
        rhs = rhs * one_m_qinv
        inner = XPoly.zero(m)
        for k in range(0, a + 1):
            inner = inner + e_range(k, 1, a, m) * e_range(r - k, a + 1, m, m)
        rhs = rhs + e_range(1, 1, a, m) * inner * qinv
        if total != rhs:
            return False
        if a < m:
            word = apply_T(a, word)
            total = total + word
    if star(e_range(1, 1, m, m), er) != pieri_rhs(r, m):
        return False
    return True
