"""Partial symmetrizers and the two-parameter chromatic functions.

The main entry point qt_csf builds the polynomial by applying a product
of hat-symmetrizers to 1, right-to-left.  Each hat-symmetrizer is a sum
of operator words sharing prefixes, so the k-term sum costs k single
generator applications.
"""

from __future__ import annotations

from .qt import (QTCoeff, ZERO, ONE, qt_monomial, t_int, t_factorial,
                 specialize_q1, limit_q_infinity, QTError)
from .xring import XPoly, XError, truncate, is_symmetric
from .hecke import apply_T_inv, apply_pi, apply_pi_inv
from .symfn import expand_in_e, apply_N, e_stat, e_poly, EExpansion
from .graphs import (check_eseq, eseq_to_aseq, graph_from_eseq, chromatic_qsf,
                     eseq_weight)


def apply_S(i, e, f):
    """The partial symmetrizer with m+e-i+1 summands (T indices mod m).

    Zero when e < i-m, the identity when e = i-m.
    """
    m = f.m
    if e < i - m:
        return XPoly.zero(m)
    total = f
    g = f
    for j in range(i, m + e):
        g = apply_T_inv(j % m, g)
        total = total + g
    return total


def apply_hatS(a, f):
    """(1 + T_1^{-1} + ... + T_a^{-1}...T_1^{-1}) Pi, zero for a < 0."""
    m = f.m
    if a < 0:
        return XPoly.zero(m)
    if a >= m:
        raise XError("hat symmetrizer index %d outside supported range 0..%d"
                     % (a, m - 1))
    g = apply_pi(f)
    total = g
    for j in range(1, a + 1):
        g = apply_T_inv(j, g)
        total = total + g
    return total


def qt_csf(eseq, m):
    """The m-variable two-parameter chromatic polynomial of the graph.

    Computed as t^{n(m-1)} times the product of hat-symmetrizers indexed
    by m-1-a(i), applied to 1 from the right.
    """
    eseq = check_eseq(eseq)
    if m < 2:
        raise XError("need m >= 2 variables")
    n = len(eseq)
    a = eseq_to_aseq(eseq)
    f = XPoly.one(m)
    for i in range(n, 0, -1):
        idx = m - 1 - a[i - 1]
        if idx < 0:
            return XPoly.zero(m)
        f = apply_hatS(idx, f)
        if f.is_zero():
            return f
    return f * qt_monomial(1, 0, n * (m - 1))


def qt_csf_via_s(eseq, m):
    """Same value through the other operator factorization (S then Pi^n)."""
    eseq = check_eseq(eseq)
    if m < 2:
        raise XError("need m >= 2 variables")
    n = len(eseq)
    f = XPoly.one(m)
    for _ in range(n):
        f = apply_pi(f)
    for i in range(n, 0, -1):
        f = apply_S(i, eseq[i - 1], f)
        if f.is_zero():
            return f
    return f * qt_monomial(1, 0, n * (m - 1))


def check_stability(eseq, m, mp):
    """True iff the m-variable result truncates to the m'-variable one."""
    if not 2 <= mp < m:
        raise XError("need 2 <= m' < m")
    return truncate(qt_csf(eseq, m), mp) == qt_csf(eseq, mp)


def check_q1_collapse(eseq, m):
    """At q=1 the operator result must match the twisted coloring oracle."""
    eseq = check_eseq(eseq)
    n = len(eseq)
    if m < n:
        raise XError("need m >= n for a faithful e-expansion")
    f = qt_csf(eseq, m)
    f1 = XPoly(m, {e: specialize_q1(c) for e, c in f.terms.items()})
    lhs = expand_in_e(f1)
    oracle = chromatic_qsf(graph_from_eseq(eseq), m)
    rhs = apply_N(expand_in_e(oracle))
    return lhs == rhs


def c_lambda(eseq):
    """e-basis coefficients of the coloring oracle (evaluated at m = n)."""
    eseq = check_eseq(eseq)
    n = len(eseq)
    return expand_in_e(chromatic_qsf(graph_from_eseq(eseq), n))


def check_dist_identity(eseq):
    """The weighted sum of the c_lam over lam must telescope to 1."""
    eseq = check_eseq(eseq)
    w = eseq_weight(eseq)
    total = ZERO
    for lam, c in c_lambda(eseq).coeffs.items():
        denom = ONE
        for p in lam:
            denom = denom * t_factorial(p)
        total = total + qt_monomial(1, 0, w - e_stat(lam)) * c / denom
    return total == ONE


def check_qinf_limit(eseq, m):
    """Coefficientwise q -> infinity limit against the closed form."""
    eseq = check_eseq(eseq)
    n = len(eseq)
    if m < n:
        raise XError("need m >= n")
    f = qt_csf(eseq, m)
    try:
        lim = XPoly(m, {e: limit_q_infinity(c) for e, c in f.terms.items()})
    except QTError:
        return False
    k = n * (n - 1) // 2 - eseq_weight(eseq)
    want = e_poly((n,), m) * (t_factorial(n) * qt_monomial(1, 0, k))
    return lim == want
