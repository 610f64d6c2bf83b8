"""Command line front end.

Verbs: list, show, cohomology, invariant-cohomology, verify, schouten, dpi,
modular, resonances, jacobi.  Exit status 0 on success and on verify-pass,
1 on verify-fail, 2 on usage or domain errors.  Output is deterministic:
identical command lines produce byte-identical output.

In expressions, dx/dy/dz denote the coordinate vector fields (not 1-forms);
^ between generators is a wedge, between a variable and an integer a power.
"""

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .cohomology import (
    cell_multivectors,
    cohomology_table,
    invariant_cohomology,
    resonances,
)
from .expressions import ExpressionError, format_multivector, parse_multivector
from .multivector import modular_vector_field, schouten_bracket
from .registry import KINDS, Algebra, jacobi_defect, linear_poisson, structure_constants
from .verification import FIXTURE_IDS, modular_class_check, verify

# schema for the JSON table documents emitted by cohomology verbs
TABLE_SCHEMA = {
    "type": "object",
    "required": ["algebra", "tau", "dmax", "cells", "totals", "stable"],
    "additionalProperties": False,
    "properties": {
        "algebra": {"type": "string"},
        "tau": {"type": ["string", "null"]},
        "dmax": {"type": "integer", "minimum": 0},
        "cells": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["q", "d", "dim_cochains", "rank_in", "rank_out",
                             "dim_h", "representatives"],
                "additionalProperties": False,
                "properties": {
                    "q": {"type": "integer", "minimum": 0, "maximum": 3},
                    "d": {"type": "integer", "minimum": 0},
                    "dim_cochains": {"type": "integer", "minimum": 0},
                    "rank_in": {"type": "integer", "minimum": 0},
                    "rank_out": {"type": "integer", "minimum": 0},
                    "dim_h": {"type": "integer", "minimum": 0},
                    "representatives": {
                        "type": "array", "items": {"type": "string"},
                    },
                },
            },
        },
        "totals": {
            "type": "object",
            "required": ["0", "1", "2", "3"],
            "additionalProperties": False,
            "properties": {
                key: {"type": "integer", "minimum": 0} for key in "0123"
            },
        },
        "stable": {"type": "boolean"},
    },
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="poisson3",
        description="Exact Poisson cohomology of linear Poisson structures on R^3.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_algebra_opts(p):
        p.add_argument("--algebra", required=True, choices=KINDS)
        p.add_argument("--tau", default=None,
                       help="rational parameter p/q for book and spiral")

    def add_output_opts(p):
        p.add_argument("--format", default="text", choices=("text", "json", "csv"))
        p.add_argument("--out", default=None, metavar="FILE",
                       help="write output to FILE instead of stdout")

    sub.add_parser("list", help="list algebra kinds and fixture ids")

    p = sub.add_parser("show", help="structure constants and Poisson structure")
    add_algebra_opts(p)

    for verb, blurb in (
        ("cohomology", "graded cohomology table"),
        ("invariant-cohomology", "cohomology of the rotation-invariant subcomplex"),
    ):
        p = sub.add_parser(verb, help=blurb)
        add_algebra_opts(p)
        p.add_argument("--dmax", type=int, required=True)
        p.add_argument("--q", default=None,
                       help="comma separated cochain degrees to include, e.g. 1,2")
        add_output_opts(p)

    p = sub.add_parser("verify", help="check engine output against a fixture")
    p.add_argument("--id", required=True, choices=FIXTURE_IDS, dest="fixture_id")
    p.add_argument("--dmax", type=int, required=True)
    add_output_opts(p)

    p = sub.add_parser("schouten", help="bracket of two multivector expressions")
    p.add_argument("first")
    p.add_argument("second")

    p = sub.add_parser("dpi", help="Poisson differential of an expression")
    add_algebra_opts(p)
    p.add_argument("expression")

    p = sub.add_parser("modular", help="modular vector field and its class")
    add_algebra_opts(p)

    p = sub.add_parser("resonances", help="integer pairs (i, j) with i + tau*j = c")
    p.add_argument("--tau", required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--dmax", type=int, required=True)

    p = sub.add_parser("jacobi", help="self-bracket [pi, pi] for a registry kind")
    add_algebra_opts(p)

    return parser


def _algebra(args):
    tau = None if args.tau is None else Fraction(args.tau)
    return Algebra(args.algebra, tau)


def _tau_str(tau):
    return None if tau is None else str(tau)


def _parse_q_filter(text):
    if text is None:
        return (0, 1, 2, 3)
    out = []
    for piece in text.split(","):
        q = int(piece)
        if not 0 <= q <= 3:
            raise ValueError("cochain degree must be 0..3, got %d" % (q,))
        if q not in out:
            out.append(q)
    return tuple(sorted(out))


def _collect_cells(algebra, dmax, invariant):
    pi = linear_poisson(algebra)
    if invariant:
        cells = {}
        for q in range(4):
            for d in range(dmax + 1):
                cells[(q, d)] = invariant_cohomology(pi, q, d)
        totals = {
            q: sum(cells[(q, d)].dim_h for d in range(dmax + 1)) for q in range(4)
        }
        top = [
            sum(cells[(q, d)].dim_h for q in range(4))
            for d in range(max(dmax - 2, 0), dmax + 1)
        ]
        stable = dmax >= 2 and not any(top)
        return cells, totals, stable
    table = cohomology_table(pi, dmax)
    cells = {key: table.cell(*key) for key in
             ((q, d) for q in range(4) for d in range(dmax + 1))}
    return cells, table.totals, table.stable


def _table_document(algebra, dmax, cells, totals, stable, q_filter):
    doc_cells = []
    for q in q_filter:
        for d in range(dmax + 1):
            cell = cells[(q, d)]
            doc_cells.append({
                "q": q,
                "d": d,
                "dim_cochains": cell.dim_cochains,
                "rank_in": cell.rank_in,
                "rank_out": cell.rank_out,
                "dim_h": cell.dim_h,
                "representatives": [
                    format_multivector(rep) for rep in cell_multivectors(cell)
                ],
            })
    return {
        "algebra": algebra.name,
        "tau": _tau_str(algebra.tau),
        "dmax": dmax,
        "cells": doc_cells,
        "totals": {str(q): totals[q] for q in range(4)},
        "stable": stable,
    }


def _render_table_text(doc, invariant):
    lines = []
    lines.append("algebra: %s" % doc["algebra"])
    lines.append("tau: %s" % ("none" if doc["tau"] is None else doc["tau"]))
    lines.append("dmax: %d" % doc["dmax"])
    if invariant:
        lines.append("subcomplex: rotation invariant")
    qs = sorted({cell["q"] for cell in doc["cells"]})
    dmax = doc["dmax"]
    width = max(3, max(len(str(cell["dim_h"])) for cell in doc["cells"]))
    header = " q\\d |" + "".join(str(d).rjust(width + 1) for d in range(dmax + 1))
    lines.append(header)
    lines.append("-" * len(header))
    by_cell = {(cell["q"], cell["d"]): cell for cell in doc["cells"]}
    for q in qs:
        row = "   %d |" % q
        for d in range(dmax + 1):
            row += str(by_cell[(q, d)]["dim_h"]).rjust(width + 1)
        lines.append(row)
    lines.append("totals: " + " ".join(
        "H^%s=%d" % (q, doc["totals"][q]) for q in "0123"))
    lines.append("stable: %s" % ("yes" if doc["stable"] else "no"))
    lines.append("representatives (nonzero cells):")
    for cell in doc["cells"]:
        if cell["dim_h"]:
            for rep in cell["representatives"]:
                lines.append("  q=%d d=%d: %s" % (cell["q"], cell["d"], rep))
    return "\n".join(lines) + "\n"


def _render_table_csv(doc):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["q", "d", "dim_cochains", "rank_in", "rank_out",
                     "dim_h", "representatives"])
    for cell in doc["cells"]:
        writer.writerow([
            cell["q"], cell["d"], cell["dim_cochains"], cell["rank_in"],
            cell["rank_out"], cell["dim_h"],
            "; ".join(cell["representatives"]),
        ])
    return buffer.getvalue()


def _emit(args, text):
    if getattr(args, "out", None):
        with open(args.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _run_table(args, invariant):
    algebra = _algebra(args)
    if args.dmax < 0:
        raise ValueError("dmax must be nonnegative")
    q_filter = _parse_q_filter(args.q)
    cells, totals, stable = _collect_cells(algebra, args.dmax, invariant)
    doc = _table_document(algebra, args.dmax, cells, totals, stable, q_filter)
    if args.format == "json":
        text = json.dumps(doc, indent=2) + "\n"
    elif args.format == "csv":
        text = _render_table_csv(doc)
    else:
        text = _render_table_text(doc, invariant)
    _emit(args, text)
    return 0


def _run_verify(args):
    report = verify(args.fixture_id, args.dmax)
    if args.format == "json":
        doc = {
            "id": report.fixture_id,
            "dmax": report.dmax,
            "passed": report.passed,
            "cells_checked": report.cells_checked,
            "generator_cells": report.generator_cells,
            "exactness_checks": report.exactness_checks,
            "mismatches": list(report.mismatches),
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        text = "\n".join(report.lines()) + "\n"
    _emit(args, text)
    return 0 if report.passed else 1


def _run_list(args):
    lines = ["algebras:"]
    for kind in KINDS:
        note = ""
        if kind == "book":
            note = "  (requires --tau with 0 < |tau| <= 1)"
        elif kind == "spiral":
            note = "  (requires --tau > 0)"
        lines.append("  " + kind + note)
    lines.append("fixtures:")
    for fixture_id in FIXTURE_IDS:
        lines.append("  " + fixture_id)
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _run_show(args):
    algebra = _algebra(args)
    constants = structure_constants(algebra)
    lines = ["algebra: %s" % algebra.name,
             "tau: %s" % ("none" if algebra.tau is None else algebra.tau)]
    lines.append("nonzero brackets:")
    pairs = sorted({(i, j) for (i, j, _k) in constants.c})
    if not pairs:
        lines.append("  (all brackets vanish)")
    for i, j in pairs:
        terms = []
        for k in range(3):
            value = constants.get(i, j, k)
            if not value:
                continue
            if value == 1:
                terms.append("e%d" % (k + 1,))
            elif value == -1:
                terms.append("-e%d" % (k + 1,))
            else:
                terms.append("%s e%d" % (value, k + 1))
        lines.append("  [e%d, e%d] = %s" % (i + 1, j + 1, " + ".join(terms)))
    pi = linear_poisson(algebra)
    lines.append("poisson structure: %s" % format_multivector(pi))
    lines.append("modular field: %s" % format_multivector(modular_vector_field(pi)))
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _run_schouten(args):
    first = parse_multivector(args.first)
    second = parse_multivector(args.second)
    sys.stdout.write(format_multivector(schouten_bracket(first, second)) + "\n")
    return 0


def _run_dpi(args):
    pi = linear_poisson(_algebra(args))
    value = parse_multivector(args.expression)
    sys.stdout.write(format_multivector(schouten_bracket(pi, value)) + "\n")
    return 0


def _run_modular(args):
    check = modular_class_check(_algebra(args))
    lines = [
        "modular field: %s" % format_multivector(check.field),
        "expected: %s" % format_multivector(check.expected),
        "matches table: %s" % ("yes" if check.matches else "no"),
        "cocycle: %s" % ("yes" if check.is_cocycle else "no"),
        "exact: %s" % ("yes" if check.is_exact else "no"),
        "unimodular: %s" % ("yes" if check.unimodular else "no"),
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _run_resonances(args):
    if args.dmax < 0:
        raise ValueError("dmax must be nonnegative")
    pairs = resonances(Fraction(args.tau), Fraction(args.c), args.dmax)
    if pairs:
        text = " ".join("(%d,%d)" % pair for pair in pairs)
    else:
        text = "none"
    sys.stdout.write(text + "\n")
    return 0


def _run_jacobi(args):
    algebra = _algebra(args)
    defect = jacobi_defect(algebra)
    lines = ["[pi, pi] = %s" % format_multivector(defect),
             "jacobi identity: %s" % ("satisfied" if defect.is_zero() else "violated")]
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


_HANDLERS = {
    "list": _run_list,
    "show": _run_show,
    "cohomology": lambda args: _run_table(args, invariant=False),
    "invariant-cohomology": lambda args: _run_table(args, invariant=True),
    "verify": _run_verify,
    "schouten": _run_schouten,
    "dpi": _run_dpi,
    "modular": _run_modular,
    "resonances": _run_resonances,
    "jacobi": _run_jacobi,
}

# options whose values may start with a minus sign (argparse would read
# them as flags); fused into --opt=value before parsing
_NUMERIC_OPTS = ("--tau", "--c")


def _fuse_numeric_options(argv):
    out = []
    skip = False
    for pos, arg in enumerate(argv):
        if skip:
            skip = False
            continue
        if arg in _NUMERIC_OPTS and pos + 1 < len(argv):
            out.append(arg + "=" + argv[pos + 1])
            skip = True
        else:
            out.append(arg)
    return out


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(_fuse_numeric_options(list(argv)))
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return _HANDLERS[args.verb](args)
    except (ExpressionError,) as exc:
        sys.stderr.write("error: %s\n" % (exc,))
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        sys.stderr.write("error: %s\n" % (exc,))
        return 2
    except OSError as exc:
        sys.stderr.write("error: %s\n" % (exc,))
        return 2


def entrypoint():
    sys.exit(main())
