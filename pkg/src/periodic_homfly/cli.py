"""Command-line front end.

Diagram arguments accept a PD code (``PD[X[1,4,2,5],...]``), a braid word
(``3: 1 -2 1``, closed up), a factor presentation
(``p=3 r=1 braid=3: 1 2``, built into the extended periodic link), or the
path of a file holding one of these.

Exit codes: 0 success, 1 obstruction found by ``check`` (or a failing
``selftest``), 2 bad input, 3 crossing limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .corpus import CrossCheckError, ingest, scan
from .criteria import check_congruences, skein_residual
from .diagram import (
    DiagramError,
    LinkDiagram,
    braid_closure,
    format_pd,
    parse_braid,
    parse_pd,
)
from .homfly import MAX_CROSSINGS_ENV, CrossingLimitError, homfly, homfly_coeffs
from .periodic import FactorPresentation, PeriodicityError, component_orbits, make_extended, skein_triple
from .polyring import PolyParseError

EXIT_OK, EXIT_OBSTRUCTION, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


class InputError(Exception):
    pass


def read_diagram(text: str) -> tuple[LinkDiagram, FactorPresentation | None]:
    if os.path.isfile(text):
        with open(text) as fh:
            text = fh.read().strip()
    s = text.strip()
    if s.startswith("p="):
        f = FactorPresentation.parse(s)
        return make_extended(f), f
    if s.startswith(("PD", "X[", "[")):
        return parse_pd(s), None
    if ":" in s:
        return braid_closure(parse_braid(s)), None
    raise InputError(f"cannot read a diagram from {text!r}")


def _cmd_compute(args):
    d, _ = read_diagram(args.diagram)
    print(homfly(d, max_crossings=args.max_crossings))
    return EXIT_OK


def _cmd_coeffs(args):
    d, _ = read_diagram(args.diagram)
    cs = homfly_coeffs(d, max_crossings=args.max_crossings)
    for i in sorted(cs):
        print(f"P_{cs.exponent(i)} = {cs[i]}")
    return EXIT_OK


def _cmd_check(args):
    d, f = read_diagram(args.diagram)
    r = args.r if args.r is not None else (f.r if f else 1)
    rep = check_congruences(homfly(d, max_crossings=args.max_crossings), d.n_components, args.p, r, args.diagram)
    print(rep.to_json(indent=2) if args.json else rep.summary())
    return EXIT_OK if rep.passed else EXIT_OBSTRUCTION


def _cmd_scan(args):
    res = ingest(args.corpus)
    for e in res.errors:
        print(f"warning: {e}", file=sys.stderr)
    try:
        rep = scan(res.records, args.p, args.components, select=args.select, workers=args.workers,
                   allow_mismatch=args.allow_mismatch, max_crossings=args.max_crossings)
    except CrossCheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(rep.to_json() if args.json else rep.table())
    return EXIT_OK


def _cmd_generate(args):
    f = FactorPresentation(parse_braid(args.braid), args.p, args.r)
    d = make_extended(f)
    print(f)
    print(f"components: {d.n_components}  crossings: {d.n_crossings}")
    print(f"axis components: {sorted(d.axis_components)}")
    print(f"orbits: {component_orbits(f)}")
    print(format_pd(d))
    return EXIT_OK


def _cmd_triple(args):
    t = skein_triple(parse_braid(args.braid), args.mark, args.p, args.r)
    if not t.strongly_periodic:
        print("note: the plus factor is not strongly periodic", file=sys.stderr)
    for label, b, d in zip(("plus", "minus", "zero"), t.factors, (t.plus, t.minus, t.zero)):
        print(f"{label}: factor {b}  ({d.n_components} components, {d.n_crossings} crossings)")
        print(f"  {format_pd(d)}")
    res = skein_residual(t, max_crossings=args.max_crossings)
    print(f"residual mod {args.p}: {res}")
    return EXIT_OK


def _cmd_selftest(args):
    from . import selftest

    return EXIT_OK if selftest.run(seed=args.seed, quick=not args.full) else EXIT_OBSTRUCTION


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="periodic-homfly",
        description="HOMFLYPT polynomials and mod-p periodicity obstructions.",
        epilog=f"The crossing limit defaults to ${MAX_CROSSINGS_ENV} or 24.",
    )
    ap.add_argument("--max-crossings", type=int, default=None, help="refuse larger diagrams")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="HOMFLYPT polynomial of a diagram")
    p.add_argument("diagram")
    p.set_defaults(fn=_cmd_compute)

    p = sub.add_parser("coeffs", help="coefficients of each power of z")
    p.add_argument("diagram")
    p.set_defaults(fn=_cmd_coeffs)

    p = sub.add_parser("check", help="test the mod-p congruences")
    p.add_argument("diagram")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--r", type=int, default=None, help="axis multiplicity (default 1)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("scan", help="check every record of a corpus file")
    p.add_argument("corpus")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--components", type=int, nargs="+", default=None)
    p.add_argument("--select", choices=("condition2", "condition1", "both"), default="condition2",
                   help="which condition the summary lists")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--allow-mismatch", action="store_true",
                   help="summarise even if stored polynomials disagree with the engine")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_scan)

    p = sub.add_parser("generate", help="extended periodic link from a factor braid")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--braid", required=True)
    p.add_argument("--r", type=int, default=1)
    p.set_defaults(fn=_cmd_generate)

    p = sub.add_parser("triple", help="equivariant skein triple and its residual")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--braid", required=True)
    p.add_argument("--mark", type=int, required=True, help="1-based letter index")
    p.add_argument("--r", type=int, default=1)
    p.set_defaults(fn=_cmd_triple)

    p = sub.add_parser("selftest", help="run the invariant suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--full", action="store_true")
    p.set_defaults(fn=_cmd_selftest)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except CrossingLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (InputError, DiagramError, PolyParseError, PeriodicityError, ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
