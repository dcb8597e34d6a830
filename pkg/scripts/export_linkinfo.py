"""Export corpus CSV files from the KnotInfo/LinkInfo tables.

Needs the ``database_knotinfo`` and ``sympy`` packages (not dependencies of
the library itself)::

    pip install database_knotinfo sympy
    python scripts/export_linkinfo.py --components 4 --max-crossings 11 \
        -o src/periodic_homfly/data/census_4comp_le11.csv
    python scripts/export_linkinfo.py --small -o src/periodic_homfly/data/small_le8.csv

Every orientation variant in LinkInfo (``L10n100{0,1,0}`` ...) is a row of
its own with its own PD code, so no variant column is written.  The stored
HOMFLYPT values use the same normalisation as the library
(``v^-1 P(L+) - v P(L-) = z P(L0)``) and are converted to the library's
canonical text.
"""

import argparse
import csv
import re
import sys

import sympy

from periodic_homfly.polyring import VZPoly

V, Z = sympy.symbols("v z")


def poly_text(expr_text):
    """Printed KnotInfo/LinkInfo polynomial -> canonical text."""
    expr = sympy.sympify(expr_text.replace("^", "**"), locals={"v": V, "z": Z})
    expr = sympy.expand(expr)
    terms = {}
    for term in sympy.Add.make_args(expr):
        coeff, rest = term.as_coeff_Mul()
        powers = rest.as_powers_dict()
        key = (int(powers.get(V, 0)), int(powers.get(Z, 0)))
        extra = set(powers) - {V, Z, sympy.Integer(1)}
        if extra:
            raise ValueError(f"unexpected factor in {expr_text!r}")
        terms[key] = terms.get(key, 0) + int(coeff)
    return VZPoly(terms).format()


def link_vector_text(vec):
    """LinkInfo ``homflypt_polynomial_vector`` -> canonical text.

    Layout: ``{zmin, zmax, {vmin, vmax, c...}, ...}`` with one group per
    z-exponent from zmin to zmax; ``{0, 0, 0}`` marks an empty group.
    """
    head = [int(t) for t in re.match(r"\s*\{\s*(-?\d+)\s*,\s*(-?\d+)", vec).groups()]
    groups = re.findall(r"\{([^{}]*)\}", vec.strip()[1:-1])
    if len(groups) != head[1] - head[0] + 1:
        raise ValueError(f"malformed HOMFLYPT vector {vec!r}")
    terms = {}
    for k, g in enumerate(groups):
        vals = [int(x) for x in g.split(",")]
        for j, c in enumerate(vals[2:]):
            if c:
                terms[(vals[0] + j, head[0] + k)] = c
    return VZPoly(terms).format()


def knot_pd(text):
    # KnotInfo knots: [[1,5,2,4],...]
    tuples = re.findall(r"\[([-\d\s,]+)\]", text)
    return "PD[" + ",".join("X[" + ",".join(t.split(",")) + "]" for t in tuples) + "]"


def link_pd(text):
    return re.sub(r"\s+", "", text)


def link_rows(components=None, max_crossings=11, min_crossings=0):
    import database_knotinfo

    for row in database_knotinfo.link_list(proper_links=True):
        name = row["name"]
        if not name or name.startswith("Name") or not row.get("pd_notation_math"):
            continue
        ncomp = int(row["components"])
        cr = int(row["crossing_number"])
        if components is not None and ncomp not in components:
            continue
        if not (min_crossings <= cr <= max_crossings):
            continue
        yield {
            "name": name,
            "components": ncomp,
            "pd": link_pd(row["pd_notation_math"]),
            "homfly": link_vector_text(row["homflypt_polynomial_vector"]),
        }


def knot_rows(max_crossings=8):
    import database_knotinfo

    for row in database_knotinfo.link_list():
        name = row["name"]
        if not name or not name[0].isdigit() or name == "0_1":
            continue
        if int(row["crossing_number"]) > max_crossings:
            continue
        yield {
            "name": name,
            "components": 1,
            "pd": knot_pd(row["pd_notation"]),
            "homfly": poly_text(row["homfly_polynomial"]),
        }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-o", "--output", required=True)
    ap.add_argument("--components", type=int, nargs="*")
    ap.add_argument("--max-crossings", type=int, default=11)
    ap.add_argument("--small", action="store_true",
                    help="knots and 2-3 component links up to 8 crossings")
    args = ap.parse_args(argv)
    if args.small:
        rows = list(knot_rows(8)) + list(link_rows({2, 3}, 8))
    else:
        rows = list(link_rows(set(args.components) if args.components else None,
                              args.max_crossings))
    with open(args.output, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=["name", "components", "pd", "homfly"])
        w.writeheader()
        w.writerows(rows)
    print(f"wrote {len(rows)} records to {args.output}", file=sys.stderr)


if __name__ == "__main__":
    main()
