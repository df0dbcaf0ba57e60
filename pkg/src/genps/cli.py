"""Command-line surface.

Verbs: count, genfunc, expand, faces, vertex-check, tables, pps.
Vectors are comma-separated and 1-indexed; b defaults to all zeros.
Exit codes: 0 ok, 1 usage error, 2 verification mismatch, 3 budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import counting, faces, partitions, tables, vertices
from .grids import IntegerFlow, build_grid_graph, flow_from_horizontal
from .vectors import InputError, theta

USAGE_ERROR, MISMATCH, BUDGET = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer vector: {text!r}")


def _emit(data, fmt: str):
    if fmt == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    elif fmt == "csv":
        if isinstance(data, dict):
            print(",".join(str(k) for k in data))
            print(",".join(str(v) for v in data.values()))
        else:
            print(",".join(str(v) for v in data))
    else:  # ascii
        if isinstance(data, dict):
            for k, v in data.items():
                print(f"{k}: {v}")
        else:
            print(data)


def _resolve_b(args, n: int):
    return args.b if args.b is not None else (0,) * n


def cmd_count(args) -> int:
    a = args.a
    b = _resolve_b(args, len(a))
    if args.mode == "vertices":
        if any(b):
            value = counting.count_vertex_pps(theta(a, b), args.m)
        else:
            value = counting.v_vertices_matrix(a, args.m)
    elif args.mode == "unsplittable":
        value = counting.v_unsplit_matrix(a, b, args.m)
    else:  # lattice points
        value = partitions.count_pps(theta(a, b), args.m)
    _emit({"value": value}, args.format)
    return 0


def cmd_genfunc(args) -> int:
    a = args.a
    b = _resolve_b(args, len(a))
    gf = counting.genfunc(a, b, args.mode, engine=args.engine)
    _emit(gf.to_json(), args.format)
    return 0


def cmd_expand(args) -> int:
    a = args.a
    b = _resolve_b(args, len(a))
    if args.mode == "vertices":
        exp = counting.p_coefficients(a, b)
    else:
        exp = counting.binomial_expansion_unsplit(a, b)
    _emit(
        {"constant": exp.constant, "coefficients": list(exp.coefficients)},
        args.format,
    )
    return 0


def cmd_faces(args) -> int:
    a = args.a
    n = len(a)
    if args.b is not None and any(args.b):
        raise InputError("face counting supports b = 0 only")
    if args.d is not None:
        _emit({"value": faces.face_count_recurse(a, args.m, args.d)}, args.format)
        return 0
    fv = faces.face_vector_recurse(a, n, args.m)
    if args.check:
        bf = faces.face_count_bruteforce(a, n, args.m, budget=args.budget)
        if bf != fv:
            _emit({"recursive": list(fv.including_empty), "bruteforce": list(bf.including_empty)}, args.format)
            return MISMATCH
    _emit({"f_vector": list(fv.including_empty)}, args.format)
    return 0


def cmd_vertex_check(args) -> int:
    data = json.load(sys.stdin if args.file == "-" else open(args.file))
    a = args.a
    b = _resolve_b(args, len(a))
    if "rows" in data:
        pp = partitions.PlanePartition.from_json(data)
        flow = partitions.psi(pp, a, b)
    elif "x" in data:
        g = build_grid_graph(len(a), args.m, a, b)
        flow = flow_from_horizontal(g, data["x"])
        pp = partitions.psi_inverse(flow)
    else:
        raise InputError("expected a plane partition {rows,bound} or a flow {x}")
    verdict = vertices.is_vertex_flow(flow)
    out = {
        "is_vertex": verdict,
        "forest_support": verdict,
        "split_merge_ok": vertices.split_merge_check(flow),
        "vertex_plane_partition": vertices.is_vertex_pp(pp),
    }
    bad = vertices.violated_column_pair(pp)
    if bad is not None:
        out["violated_column_pair"] = bad
    _emit(out, args.format)
    return 0


def cmd_tables(args) -> int:
    status = 0
    for which in args.which or (1, 2, 3):
        diff = tables.reproduce_table(which)
        report = {
            "table": which,
            "rows": len(diff.computed.rows),
            "mismatches": [
                {
                    "pattern": "".join(map(str, exp.pattern)),
                    "expected": {"degree": exp.degree, "numerator": list(exp.numerator)},
                    "computed": {"degree": got.degree, "numerator": list(got.numerator)},
                }
                for exp, got in diff.mismatches
            ],
        }
        _emit(report, args.format)
        if not diff.ok:
            status = MISMATCH
    return status


def cmd_pps(args) -> int:
    a = args.a
    b = _resolve_b(args, len(a))
    sh = theta(a, b)
    shown = 0
    for pp in partitions.enumerate_pps(sh, args.m):
        if args.format == "json":
            print(json.dumps(pp.to_json()))
        else:
            print(partitions.ascii_diagram(pp))
            print()
        shown += 1
        if args.limit is not None and shown >= args.limit:
            break
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="genps", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_m=True):
        p.add_argument("--a", type=_vector, required=True, help="comma-separated netflow vector a")
        p.add_argument("--b", type=_vector, default=None, help="comma-separated vector b (default 0)")
        if need_m:
            p.add_argument("--m", type=int, required=True, help="entry bound / number of grid columns")
        p.add_argument("--format", choices=("json", "csv", "ascii"), default="json")
        p.add_argument("--jobs", type=int, default=1, help="accepted for compatibility; single-process")
        p.add_argument("--budget", type=int, default=None, help="work budget for brute-force sweeps")

    p = sub.add_parser("count", help="count lattice points, vertices, or unsplittable flows")
    common(p)
    p.add_argument("--mode", choices=("vertices", "unsplittable", "points"), default="vertices")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("genfunc", help="reduced generating function over m")
    common(p, need_m=False)
    p.add_argument("--mode", choices=("vertices", "unsplittable"), default="vertices")
    p.add_argument("--engine", choices=("values", "determinant"), default="values")
    p.set_defaults(func=cmd_genfunc)

    p = sub.add_parser("expand", help="binomial-basis expansion of the counting polynomial")
    common(p, need_m=False)
    p.add_argument("--mode", choices=("vertices", "unsplittable"), default="unsplittable")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("faces", help="face counts of the straight-shape polytope")
    common(p)
    p.add_argument("--d", type=int, default=None, help="single dimension instead of the full vector")
    p.add_argument("--check", action="store_true", help="cross-check against the brute force")
    p.set_defaults(func=cmd_faces)

    p = sub.add_parser("vertex-check", help="vertex verdict for a plane partition or flow (JSON)")
    common(p)
    p.add_argument("--file", default="-", help="JSON input path, - for stdin")
    p.set_defaults(func=cmd_vertex_check)

    p = sub.add_parser("tables", help="recompute the n = 5 golden tables and diff")
    p.add_argument("which", nargs="*", type=int, default=[1, 2, 3])
    p.add_argument("--format", choices=("json", "csv", "ascii"), default="json")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("pps", help="stream the plane partitions of theta(a, b)")
    common(p)
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_pps)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"genps: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except faces.BudgetExceeded as exc:
        print(f"genps: budget exceeded: {exc}", file=sys.stderr)
        return BUDGET


if __name__ == "__main__":
    sys.exit(main())
