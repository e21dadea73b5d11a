"""Command-line front end.

Subcommands: compute, expand, star, qt-elem, verify, list-graphs.
Exit codes: 0 success, 1 identity failure, 2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .qt import QTError, specialize_q1, limit_q_infinity, render_coeff
from .xring import XPoly, XError, render_xpoly
from .symfn import EExpansion, SymFnError, e_poly, expand_in_e
from .graphs import (GraphError, check_eseq, aseq_to_eseq, hseq_to_eseq,
                     eseq_to_aseq, eseq_to_hseq, graph_from_eseq, chromatic_qsf,
                     enumerate_eseqs)
from .qtcsf import qt_csf
from .qmapstar import QMapError, star, qt_elementary
from .suites import SUITES


def render_eexp(exp):
    """Text form with partitions in ascending lexicographic order."""
    if not exp.coeffs:
        return "0"
    parts = []
    for lam in sorted(exp.coeffs):
        c = exp.coeffs[lam]
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


def _parse_seq(args):
    given = [name for name in ("eseq", "aseq", "hess") if getattr(args, name)]
    if len(given) != 1:
        raise GraphError("give exactly one of --eseq, --aseq, --hess")
    raw = getattr(args, given[0])
    try:
        seq = tuple(int(x) for x in raw.split(","))
    except ValueError:
        raise GraphError("cannot parse sequence %r" % raw) from None
    if given[0] == "aseq":
        return aseq_to_eseq(seq)
    if given[0] == "hess":
        return hseq_to_eseq(seq)
    return check_eseq(seq)


_ELIT_TERM = re.compile(r"^(?:(-?\d+)\*)?e\[([0-9,]*)\]$")


def parse_symfn(text, m):
    """Parse a symmetric-function literal like "e[2,1] + 3*e[1,1,1]"."""
    s = text.replace(" ", "")
    if not s:
        raise XError("empty symmetric-function literal")
    s = s.replace("-", "+-")
    out = XPoly.zero(m)
    for chunk in s.split("+"):
        if not chunk:
            continue
        neg = chunk.startswith("-") and not _ELIT_TERM.match(chunk)
        if neg:
            chunk = chunk[1:]
        mt = _ELIT_TERM.match(chunk)
        if not mt:
            raise XError("cannot parse term %r in %r" % (chunk, text))
        coef = int(mt.group(1)) if mt.group(1) else 1
        if neg:
            coef = -coef
        lam = tuple(int(x) for x in mt.group(2).split(",")) if mt.group(2) else ()
        if any(p < 1 for p in lam):
            raise XError("partition parts must be positive in %r" % chunk)
        if tuple(sorted(lam, reverse=True)) != lam:
            raise XError("partition must be weakly decreasing in %r" % chunk)
        out = out + e_poly(lam, m) * coef
    return out


def _specialize(f, args):
    if getattr(args, "q1", False):
        return XPoly(f.m, {e: specialize_q1(c) for e, c in f.terms.items()})
    if getattr(args, "qinf", False):
        return XPoly(f.m, {e: limit_q_infinity(c) for e, c in f.terms.items()})
    return f


def _emit_poly(f, args):
    if args.basis == "e":
        exp = expand_in_e(f)
        if args.format == "json":
            print(json.dumps(exp.to_json()))
        else:
            print(render_eexp(exp))
    else:
        if args.format == "json":
            print(json.dumps(f.to_json()))
        else:
            print(render_xpoly(f))


def cmd_compute(args):
    eseq = _parse_seq(args)
    f = _specialize(qt_csf(eseq, args.m), args)
    _emit_poly(f, args)
    return 0


def cmd_expand(args):
    eseq = _parse_seq(args)
    m = args.m if args.m else len(eseq)
    exp = expand_in_e(chromatic_qsf(graph_from_eseq(eseq), m))
    if args.format == "json":
        print(json.dumps(exp.to_json()))
    else:
        print(render_eexp(exp))
    return 0


def cmd_star(args):
    f = parse_symfn(args.f, args.m)
    g = parse_symfn(args.g, args.m)
    h = star(f, g)
    args.basis = args.basis or "e"
    _emit_poly(h, args)
    return 0


def cmd_qt_elem(args):
    try:
        lam = tuple(int(x) for x in args.partition.split(","))
    except ValueError:
        raise SymFnError("cannot parse partition %r" % args.partition) from None
    if any(p < 1 for p in lam) or tuple(sorted(lam, reverse=True)) != lam:
        raise SymFnError("need a weakly decreasing positive partition, got %r"
                         % args.partition)
    f = qt_elementary(lam, args.m)
    args.basis = args.basis or "e"
    _emit_poly(f, args)
    return 0


def cmd_verify(args):
    fn = SUITES[args.suite]
    kwargs = {"jobs": args.jobs}
    if args.suite == "relations":
        kwargs.update(m_max=args.m or 5, deg_max=4, count=args.count, seed=args.seed)
    elif args.suite == "modular":
        kwargs.update(n=args.n or 4, m=args.m or 5)
    elif args.suite == "stability":
        kwargs.update(n=args.n or 4, m=args.m or 6)
    elif args.suite in ("symmetry", "integrality"):
        kwargs.update(n=args.n or 5, m=args.m or 6)
    elif args.suite == "q1":
        kwargs.update(n=args.n or 5, m=args.m or 6)
    elif args.suite == "qinf":
        kwargs.update(n=args.n or 5, m=args.m or None)
    elif args.suite == "dist":
        kwargs.update(n=args.n or 5)
    elif args.suite == "pieri":
        kwargs.update(r=args.r or 5)
    elif args.suite == "mult":
        kwargs.update(n=args.n or 4, m=args.m or None)
    elif args.suite == "qmap":
        kwargs.update(r=args.r or 5, m=args.m or 10)
    report = fn(**kwargs)
    if args.format == "json":
        print(json.dumps(report.to_json()))
    else:
        print(report.render())
    return 0 if report.ok else 1


def cmd_list_graphs(args):
    rows = []
    for e in enumerate_eseqs(args.n):
        g = graph_from_eseq(e)
        rows.append({
            "eseq": list(e),
            "aseq": list(eseq_to_aseq(e)),
            "hess": list(eseq_to_hseq(e)),
            "edges": [list(x) for x in sorted(g.edges)],
        })
    if args.format == "json":
        print(json.dumps(rows))
    else:
        for row in rows:
            print("e=%s a=%s h=%s edges=%s" % (
                ",".join(map(str, row["eseq"])),
                ",".join(map(str, row["aseq"])),
                ",".join(map(str, row["hess"])),
                " ".join("%d->%d" % (v, w) for v, w in row["edges"]) or "-"))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="qtcsf",
                                description="Exact two-parameter chromatic "
                                            "symmetric function calculator")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    sub = p.add_subparsers(dest="command", required=True)

    def add_seq_flags(sp):
        sp.add_argument("--eseq")
        sp.add_argument("--aseq")
        sp.add_argument("--hess")

    sp = sub.add_parser("compute", help="compute the polynomial for a graph")
    add_seq_flags(sp)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--basis", choices=("monomial", "e"), default="monomial")
    sp.add_argument("--q1", action="store_true", help="specialize q=1")
    sp.add_argument("--qinf", action="store_true", help="take the q->infinity limit")
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("expand", help="e-expansion of the coloring sum")
    add_seq_flags(sp)
    sp.add_argument("--m", type=int, default=0)
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("star", help="quantum product of two literals")
    sp.add_argument("--f", required=True)
    sp.add_argument("--g", required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--basis", choices=("monomial", "e"), default=None)
    sp.set_defaults(func=cmd_star)

    sp = sub.add_parser("qt-elem", help="iterated quantum elementary product")
    sp.add_argument("--partition", required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--basis", choices=("monomial", "e"), default=None)
    sp.set_defaults(func=cmd_qt_elem)

    sp = sub.add_parser("verify", help="run an identity suite")
    sp.add_argument("suite", choices=sorted(SUITES))
    sp.add_argument("--n", type=int, default=0)
    sp.add_argument("--m", type=int, default=0)
    sp.add_argument("--r", type=int, default=0)
    sp.add_argument("--count", type=int, default=50)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("list-graphs", help="enumerate graph encodings")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_list_graphs)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, XError, SymFnError, QMapError, QTError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
