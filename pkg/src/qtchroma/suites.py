"""Named verification suites over the whole pipeline.

Each suite runs a family of exact identity checks and returns a
VerifyReport.  Randomized suites draw from a seeded generator so runs
are reproducible.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor

from .qt import qt_monomial, t_int, t_factorial, from_int, ONE, limit_q_infinity, QTError
from .xring import XPoly, truncate, is_symmetric, assert_integral, render_xpoly
from .hecke import apply_s, apply_T, apply_T_inv, apply_pi, apply_Y
from .symfn import e_poly, e_range, expand_in_e, partitions_of
from .graphs import enumerate_eseqs, modular_triples, concat, graph_from_eseq, chromatic_qsf
from .qtcsf import (qt_csf, qt_csf_via_s, check_stability, check_q1_collapse,
                    check_dist_identity, check_qinf_limit, c_lambda)
from .qmapstar import q_map_e, q_map_inv_sym, star, check_pieri, apply_e_r_Y


class VerifyReport:
    """Outcome of one suite: case count, failures, wall time."""

    __slots__ = ("suite", "cases", "failures", "elapsed")

    def __init__(self, suite, cases, failures, elapsed):
        self.suite = suite
        self.cases = cases
        self.failures = failures
        self.elapsed = elapsed

    @property
    def ok(self):
        return not self.failures

    def to_json(self):
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": [{"case": c, "expected": e, "actual": a}
                         for c, e, a in self.failures],
            "elapsed": self.elapsed,
        }

    def render(self):
        lines = ["suite %s: %d cases, %d failures (%.2fs)"
                 % (self.suite, self.cases, len(self.failures), self.elapsed)]
        if self.failures:
            case, exp, act = self.failures[0]
            lines.append("first counterexample: %s" % case)
            lines.append("  expected: %s" % exp)
            lines.append("  actual:   %s" % act)
        return "\n".join(lines)


def _run(suite, checks, jobs=1):
    """Run (case_id, thunk) pairs; thunk returns None or (expected, actual)."""
    start = time.time()
    failures = []

    def one(item):
        case, thunk = item
        bad = thunk()
        return None if bad is None else (case, bad[0], bad[1])

    if jobs and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(one, checks))
    else:
        results = [one(item) for item in checks]
    failures = [r for r in results if r is not None]
    return VerifyReport(suite, len(checks), failures, time.time() - start)


def _eq_check(lhs_fn, rhs_fn):
    def thunk():
        lhs, rhs = lhs_fn(), rhs_fn()
        if lhs == rhs:
            return None
        return (render_xpoly(rhs), render_xpoly(lhs))
    return thunk


def _bool_check(fn):
    def thunk():
        return None if fn() else ("identity holds", "identity fails")
    return thunk


def _rand_poly(rng, m, deg, nterms=3):
    terms = {}
    for _ in range(nterms):
        e = tuple(rng.randint(0, deg) for _ in range(m))
        terms[e] = qt_monomial(rng.randint(-4, 4), rng.randint(-1, 1), rng.randint(-1, 1))
    return XPoly(m, terms)


def suite_relations(m_max=5, deg_max=4, count=50, seed=0, jobs=1):
    """Operator relation checks on random polynomials, fixed seed."""
    rng = random.Random(seed)
    checks = []
    t = qt_monomial(1, 0, 1)
    for m in range(2, m_max + 1):
        e2y_parts = partitions_of(2)  # used for centrality at degree 2
        for deg in range(1, deg_max + 1):
            for trial in range(count):
                f = _rand_poly(rng, m, deg)
                i = rng.randrange(m)
                j = rng.randrange(m)
                tag = "m=%d deg=%d trial=%d" % (m, deg, trial)

                def quad(f=f, i=i):
                    lhs = apply_T(i, apply_T(i, f))
                    rhs = apply_T(i, f) * (t - 1) + f * t
                    return None if lhs == rhs else (render_xpoly(rhs), render_xpoly(lhs))
                checks.append(("quadratic " + tag, quad))

                def rot(f=f, i=i):
                    lhs = apply_pi(apply_T(i, f))
                    rhs = apply_T((i + 1) % m, apply_pi(f))
                    return None if lhs == rhs else (render_xpoly(rhs), render_xpoly(lhs))
                checks.append(("rotation " + tag, rot))

                if m > 2:
                    def braid(f=f, i=i):
                        jj = (i + 1) % m
                        lhs = apply_T(i, apply_T(jj, apply_T(i, f)))
                        rhs = apply_T(jj, apply_T(i, apply_T(jj, f)))
                        return None if lhs == rhs else (render_xpoly(rhs), render_xpoly(lhs))
                    checks.append(("braid " + tag, braid))

                if m > 3 and j not in (i, (i + 1) % m, (i - 1) % m):
                    def comm(f=f, i=i, j=j):
                        lhs = apply_T(i, apply_T(j, f))
                        rhs = apply_T(j, apply_T(i, f))
                        return None if lhs == rhs else (render_xpoly(rhs), render_xpoly(lhs))
                    checks.append(("commutation " + tag, comm))

                yi = rng.randint(1, m)
                yj = rng.randint(1, m)

                def ycomm(f=f, yi=yi, yj=yj):
                    lhs = apply_Y(yi, apply_Y(yj, f))
                    rhs = apply_Y(yj, apply_Y(yi, f))
                    return None if lhs == rhs else (render_xpoly(rhs), render_xpoly(lhs))
                checks.append(("Y-commutativity " + tag, ycomm))

                if trial < 5:
                    ti = rng.randrange(1, m)

                    def central(f=f, ti=ti):
                        # e_2(Y) is central, so it commutes with T_i.
                        lhs = apply_e_r_Y(2, apply_T(ti, f))
                        rhs = apply_T(ti, apply_e_r_Y(2, f))
                        return None if lhs == rhs else (render_xpoly(rhs), render_xpoly(lhs))
                    checks.append(("centrality " + tag, central))
    return _run("relations", checks, jobs)


def suite_modular(n=4, m=5, jobs=1):
    """The three-term linear relation on both computation paths."""
    checks = []
    t = qt_monomial(1, 0, 1)
    for nn in range(3, n + 1):
        for (e, ep, epp, tag) in modular_triples(nn):
            case = "n=%d %s case %s" % (nn, e, tag)

            def hecke_side(e=e, ep=ep, epp=epp):
                lhs = qt_csf(e, m) * (t + 1)
                rhs = qt_csf(ep, m) * t + qt_csf(epp, m)
                return None if lhs == rhs else (render_xpoly(rhs), render_xpoly(lhs))
            checks.append(("operator " + case, hecke_side))

            def oracle_side(e=e, ep=ep, epp=epp, nn=nn):
                lhs = chromatic_qsf(graph_from_eseq(e), nn) * (t + 1)
                rhs = (chromatic_qsf(graph_from_eseq(ep), nn) * t
                       + chromatic_qsf(graph_from_eseq(epp), nn))
                return None if lhs == rhs else (render_xpoly(rhs), render_xpoly(lhs))
            checks.append(("coloring " + case, oracle_side))
    return _run("modular", checks, jobs)


def suite_stability(n=4, m=6, jobs=1):
    checks = []
    for e in enumerate_eseqs(n):
        for mp in range(2, m):
            case = "%s m=%d m'=%d" % (e, m, mp)
            checks.append((case, _bool_check(lambda e=e, mp=mp: check_stability(e, m, mp))))
    return _run("stability", checks, jobs)


def suite_symmetry(n=5, m=6, jobs=1):
    checks = []
    for nn in range(1, n + 1):
        for e in enumerate_eseqs(nn):
            for mm in range(2, m + 1):
                case = "%s m=%d" % (e, mm)
                checks.append((case, _bool_check(
                    lambda e=e, mm=mm: is_symmetric(qt_csf(e, mm)))))
    return _run("symmetry", checks, jobs)


def suite_integrality(n=5, m=6, jobs=1):
    checks = []
    for nn in range(1, n + 1):
        for e in enumerate_eseqs(nn):
            for mm in range(2, m + 1):
                case = "%s m=%d" % (e, mm)
                checks.append((case, _bool_check(
                    lambda e=e, mm=mm: assert_integral(qt_csf(e, mm)))))
    return _run("integrality", checks, jobs)


def suite_q1(n=5, m=6, jobs=1):
    checks = [("%s m=%d" % (e, m), _bool_check(lambda e=e: check_q1_collapse(e, m)))
              for e in enumerate_eseqs(n)]
    return _run("q1", checks, jobs)


def suite_qinf(n=5, m=None, jobs=1):
    if m is None:
        m = max(n, 2)
    checks = [("%s m=%d" % (e, m), _bool_check(lambda e=e: check_qinf_limit(e, m)))
              for e in enumerate_eseqs(n)]
    return _run("qinf", checks, jobs)


def suite_dist(n=5, jobs=1):
    checks = []
    for nn in range(1, n + 1):
        for e in enumerate_eseqs(nn):
            checks.append(("%s" % (e,), _bool_check(lambda e=e: check_dist_identity(e))))
    return _run("dist", checks, jobs)


def suite_pieri(r=5, jobs=1):
    checks = [("r=%d m=%d" % (rr, 2 * rr + 2),
               _bool_check(lambda rr=rr: check_pieri(rr, 2 * rr + 2)))
              for rr in range(0, r + 1)]
    return _run("pieri", checks, jobs)


def suite_mult(n=4, m=None, jobs=1):
    if m is None:
        m = 2 * n
    checks = []
    for n1 in range(1, n):
        for n2 in range(1, n - n1 + 1):
            for e1 in enumerate_eseqs(n1):
                for e2 in enumerate_eseqs(n2):
                    case = "%s + %s m=%d" % (e1, e2, m)

                    def thunk(e1=e1, e2=e2):
                        lhs = qt_csf(concat(e1, e2), m)
                        rhs = star(qt_csf(e1, m), qt_csf(e2, m))
                        return None if lhs == rhs else (render_xpoly(rhs), render_xpoly(lhs))
                    checks.append((case, thunk))
    return _run("mult", checks, jobs)


def suite_qmap(r=5, m=10, jobs=1):
    """Transported elementaries against the closed form, plus round trips."""
    checks = []
    for mm in range(2, m + 1):
        for rr in range(1, min(r, mm) + 1):
            case = "e_%d m=%d" % (rr, mm)

            def thunk(rr=rr, mm=mm):
                lhs = q_map_e((rr,), mm)
                rhs = e_poly((rr,), mm) * qt_monomial(1, 0, rr * (rr - 1) // 2)
                return None if lhs == rhs else (render_xpoly(rhs), render_xpoly(lhs))
            checks.append((case, thunk))
    for nn in range(1, 5):
        for e in enumerate_eseqs(nn):
            case = "round trip %s m=%d" % (e, 2 * nn)

            def rt(e=e, nn=nn):
                lhs = q_map_inv_sym(qt_csf(e, max(2 * nn, 2)))
                rhs = c_lambda(e)
                return None if lhs == rhs else (str(rhs), str(lhs))
            checks.append((case, rt))
    return _run("qmap", checks, jobs)


SUITES = {
    "relations": suite_relations,
    "modular": suite_modular,
    "stability": suite_stability,
    "symmetry": suite_symmetry,
    "integrality": suite_integrality,
    "q1": suite_q1,
    "qinf": suite_qinf,
    "dist": suite_dist,
    "pieri": suite_pieri,
    "mult": suite_mult,
    "qmap": suite_qmap,
}
