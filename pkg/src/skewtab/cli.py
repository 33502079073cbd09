"""Command-line front end.

Verdicts and certificates are JSON on stdout; diagnostics go to stderr.
Exit codes: 0 = classified (or cross-check agreed), 1 = cross-check found a
disagreement, 2 = invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .shapes import SkewShape, render
from .classify import classify_shape, explain_scm, unmixed_decomposition
from .graphs import from_shape, is_unmixed_graph, is_vertex_decomposable
from .harness import PROPERTIES, crosscheck
from .ideals import is_scm_weighted_oracle, is_unmixed_ideal, weighted_edge_ideal
from .tableau import (SkewTableau, classify_tableau, explain_scm_tableau,
                      to_weighted_graph)

ALL_PROPERTIES = ("scm", "unmixed", "cm", "buchsbaum", "gcm")


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_instance(args) -> SkewShape | SkewTableau:
    shape = SkewShape.from_dict(_load_json(args.shape))
    if getattr(args, "filling", None) is None:
        return shape
    data = _load_json(args.filling)
    if "lambda" in data and tuple(data["lambda"]) != shape.lam:
        raise ValueError("filling and shape disagree on the outer partition")
    if "mu" in data and tuple(data.get("mu") or ()) not in ((), shape.mu):
        raise ValueError("filling and shape disagree on the inner partition")
    return SkewTableau(shape, data["rows"])


def _oracle_flags(obj: SkewShape | SkewTableau) -> dict:
    """Brute-force verdicts; Buchsbaum/gCM add the square-with-constant rule
    to the oracle-backed CM verdict."""
    if isinstance(obj, SkewTableau):
        g = to_weighted_graph(obj)
        unmixed = is_unmixed_ideal(weighted_edge_ideal(g))
        scm = is_scm_weighted_oracle(g)
        shape = obj.shape
        constant = len({w for row in obj.rows for w in row}) <= 1
    else:
        g = from_shape(obj)
        unmixed = is_unmixed_graph(g)
        scm = is_vertex_decomposable(g)
        shape = obj
        constant = True
    cm = unmixed and scm
    square = (not shape.is_empty and shape.n == shape.m
              and all(l == shape.m for l in shape.lam) and all(v == 0 for v in shape.mu))
    bb = cm or (square and constant)
    return {"unmixed": unmixed, "scm": scm, "cm": cm, "buchsbaum": bb, "gcm": bb}


def cmd_classify(args) -> int:
    obj = _load_instance(args)
    weighted = isinstance(obj, SkewTableau)
    if args.oracle:
        flags = _oracle_flags(obj)
        out = {"oracle": True, "verdicts": flags}
        if args.property:
            out["property"] = args.property
            out["verdict"] = flags[args.property]
    else:
        flags = (classify_tableau(obj) if weighted else classify_shape(obj)).to_dict()
        out = {"verdicts": flags}
        if args.property:
            out["property"] = args.property
            out["verdict"] = flags[args.property]
        if args.explain:
            shape = obj.shape if weighted else obj
            explain: dict = {}
            if args.property in (None, "unmixed", "cm", "buchsbaum", "gcm"):
                comps = shape.components()
                explain["unmixed_certificates"] = [
                    unmixed_decomposition(c.shape).to_dict() for c in comps]
            if args.property in (None, "scm", "cm", "buchsbaum", "gcm"):
                explain["scm_trace"] = (explain_scm_tableau(obj) if weighted
                                        else explain_scm(shape))
            out["explain"] = explain
    print(json.dumps(out, indent=2))
    return 0


def cmd_decompose(args) -> int:
    shape = SkewShape.from_dict(_load_json(args.shape))
    comps = shape.components()
    out = {"components": [{"rows": list(c.row_map), "cols": list(c.col_map),
                           "certificate": unmixed_decomposition(c.shape).to_dict()}
                          for c in comps]}
    out["unmixed"] = all(c["certificate"]["unmixed"] for c in out["components"])
    print(json.dumps(out, indent=2))
    return 0


def cmd_crosscheck(args) -> int:
    report = crosscheck(args.property, max_boxes=args.max_boxes, weighted=args.weighted,
                        max_weight=args.max_weight, jobs=args.jobs)
    print(json.dumps(report.to_dict(), indent=2))
    return 0 if report.ok else 1


def cmd_render(args) -> int:
    obj = _load_instance(args)
    if isinstance(obj, SkewTableau):
        print(obj.render())
    else:
        print(render(obj))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewtab",
        description="Classify skew Ferrers shapes and their fillings as unmixed, "
                    "sequentially Cohen-Macaulay, Cohen-Macaulay, Buchsbaum or "
                    "generalized Cohen-Macaulay.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a shape or filling")
    p.add_argument("--shape", required=True, help="JSON file {\"lambda\": [...], \"mu\": [...]}")
    p.add_argument("--filling", help="JSON file {\"rows\": [[...], ...]}")
    p.add_argument("--property", choices=ALL_PROPERTIES)
    p.add_argument("--explain", action="store_true",
                   help="emit decomposition certificates and the deletion trace")
    p.add_argument("--oracle", action="store_true",
                   help="run the brute-force oracle instead of the classifier")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", help="prime-piece gluing certificate of a shape")
    p.add_argument("--shape", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("crosscheck", help="classifier vs oracle over all bounded instances")
    p.add_argument("--property", required=True, choices=PROPERTIES)
    p.add_argument("--weighted", action="store_true")
    p.add_argument("--max-boxes", type=int, required=True)
    p.add_argument("--max-weight", type=int, default=2)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("render", help="ASCII diagram of a shape or filling")
    p.add_argument("--shape", required=True)
    p.add_argument("--filling")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
