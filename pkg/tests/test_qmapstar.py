"""Tests for the operator transport map, its inverse, and the quantum
product."""

import random

import pytest

from qtchroma.qt import ONE, from_int, qt_monomial, t_int, t_factorial
from qtchroma.xring import XPoly, is_symmetric
from qtchroma.symfn import partitions_of, e_poly, e_range, expand_in_e, EExpansion
from qtchroma.graphs import enumerate_eseqs, concat
from qtchroma.qtcsf import qt_csf, c_lambda
from qtchroma.qmapstar import (QMapError, q_map, q_map_e, q_map_inv_sym, star,
                               qt_elementary, apply_e_r_Y, pieri_rhs,
                               check_pieri)

T = qt_monomial(1, 0, 1)


def test_q_map_constant_and_linear():
    assert q_map(XPoly.one(3)) == XPoly.one(3)
    # each Y variable evaluates to the matching X variable on 1
    for m in (2, 3, 4):
        assert q_map(e_poly((1,), m)) == e_poly((1,), m)
        for i in range(1, m + 1):
            assert q_map(XPoly.variable(i, m)) == XPoly.variable(i, m)


def test_q_map_rejects_laurent_input():
    with pytest.raises(QMapError):
        q_map(XPoly(2, {(-1, 0): 1}))


def test_q_map_elementaries_closed_form():
    for m in (2, 3, 4, 5):
        for r in range(1, m + 1):
            want = e_poly((r,), m) * qt_monomial(1, 0, r * (r - 1) // 2)
            assert q_map_e((r,), m) == want


def test_q_map_is_linear():
    rng = random.Random(1)
    for _ in range(10):
        m = rng.randint(2, 4)
        f = XPoly(m, {tuple(rng.randint(0, 2) for _ in range(m)):
                      rng.randint(-3, 3) for _ in range(3)})
        g = XPoly(m, {tuple(rng.randint(0, 2) for _ in range(m)):
                      rng.randint(-3, 3) for _ in range(3)})
        assert q_map(f + g) == q_map(f) + q_map(g)
        assert q_map(f * 3) == q_map(f) * 3


def test_apply_e_r_Y_edge_cases():
    g = XPoly.one(3)
    assert apply_e_r_Y(0, g) == g
    assert apply_e_r_Y(4, g) == XPoly.zero(3)
    assert apply_e_r_Y(-1, g) == XPoly.zero(3)
    # applying e_r(Y) to 1 is the transported elementary
    for m in (3, 4):
        for r in (1, 2, 3):
            assert apply_e_r_Y(r, XPoly.one(m)) == q_map_e((r,), m)


def test_q_map_inv_sym_round_trips():
    rng = random.Random(2)
    for _ in range(12):
        d = rng.randint(1, 3)
        m = 2 * d + rng.randint(0, 1)
        coeffs = {lam: qt_monomial(rng.randint(-2, 2), rng.randint(-1, 0),
                                   rng.randint(0, 1))
                  for lam in partitions_of(d) if rng.random() < 0.7}
        want = EExpansion(d, coeffs)
        if not want.coeffs:
            continue
        f = XPoly.zero(m)
        for lam, c in want.coeffs.items():
            f = f + q_map_e(lam, m) * c
        assert q_map_inv_sym(f) == want


def test_q_map_inv_sym_degree_zero():
    f = XPoly(3, {(0, 0, 0): 5})
    out = q_map_inv_sym(f)
    assert out.coeffs == {(): from_int(5)}
    assert q_map_inv_sym(XPoly.zero(3)) == EExpansion(0, {})


def test_q_map_inv_sym_preconditions():
    with pytest.raises(QMapError):
        q_map_inv_sym(e_poly((2,), 3))            # m < 2*degree
    with pytest.raises(QMapError):
        q_map_inv_sym(XPoly(4, {(1, 0, 0, 0): 1}))  # not symmetric
    with pytest.raises(QMapError):
        q_map_inv_sym(e_poly((1,), 4) + e_poly((1, 1), 4))  # inhomogeneous


def test_star_commutative_small():
    m = 8
    a = e_poly((2,), m)
    b = e_poly((1, 1), m)
    assert star(a, b) == star(b, a)


def test_star_associative_small():
    m = 6
    e1 = e_poly((1,), m)
    assert star(star(e1, e1), e1) == star(e1, star(e1, e1))


def test_star_identity_element():
    m = 4
    f = e_poly((2,), m)
    assert star(XPoly.one(m), f) == f
    assert star(f, XPoly.one(m)) == f


def test_star_headroom_check():
    with pytest.raises(QMapError):
        star(e_poly((2,), 4), e_poly((1,), 4))   # needs m >= 6


def test_star_multiplicative_on_disjoint_graphs():
    for e1 in enumerate_eseqs(1):
        for e2 in enumerate_eseqs(2):
            m = 6
            lhs = qt_csf(concat(e1, e2), m)
            assert lhs == star(qt_csf(e1, m), qt_csf(e2, m))


def test_pieri_rule():
    for r in (0, 1, 2):
        m = 2 * r + 2
        assert star(e_range(1, 1, m, m), e_range(r, 1, m, m)) == pieri_rhs(r, m)
        assert check_pieri(r, m)


def test_pieri_preconditions():
    with pytest.raises(QMapError):
        check_pieri(-1, 4)
    with pytest.raises(QMapError):
        check_pieri(2, 4)


def test_qt_elementary_single_part():
    for r in (1, 2):
        m = 2 * r
        assert qt_elementary((r,), m) == e_poly((r,), m)


def test_qt_elementary_column():
    # (1,1): e_1 star e_1
    m = 4
    want = (e_range(2, 1, m, m) * ((from_int(1) - qt_monomial(1, -1, 0)) * t_int(2))
            + e_range(1, 1, m, m) * e_range(1, 1, m, m) * qt_monomial(1, -1, 0))
    assert qt_elementary((1, 1), m) == want


def test_qt_elementary_headroom():
    with pytest.raises(QMapError):
        qt_elementary((2, 1), 4)


def test_qt_elementary_matches_graph_values():
    # the polynomial of a disjoint union of complete graphs
    from qtchroma.graphs import eseq_of_partition
    for lam in [(1,), (2,), (1, 1), (2, 1)]:
        n = sum(lam)
        m = 2 * n
        scale = ONE
        for p in lam:
            scale = scale * t_factorial(p) * qt_monomial(1, 0, p * (p - 1) // 2)
        assert qt_csf(eseq_of_partition(lam), m) == qt_elementary(lam, m) * scale


def test_round_trip_against_oracle_coefficients():
    for n in (1, 2, 3):
        for e in enumerate_eseqs(n):
            assert q_map_inv_sym(qt_csf(e, 2 * n if n > 1 else 2)) == c_lambda(e)
