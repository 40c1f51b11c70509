"""Command-line front end.

Exit codes: 0 success (and valid verification), 1 input/usage error,
2 verification failure.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .generators import GenConfig, gen_funnel, gen_pseudotriangle
from .geometry import GeometryError
from .formats import (
    ParseError,
    SolutionDocument,
    emit_polygon_text,
    parse_polygon_text,
    violations_to_json,
)
from .oracles import (
    BruteForceLimitError,
    brute_force_hvs,
    check_cover,
    check_hidden_set,
    check_vertex_cover,
)
from .polygon import Classification, NotSimpleError, PolygonClass, classify
from .report import format_table, run_bench, write_csv, write_figure
from .solvers import (
    CoverMode,
    solve_funnel,
    solve_funnel_vertices,
    solve_pseudo,
    solve_pseudo_vertices,
)
from .svg import render_svg


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load_polygon(args) -> "Classification":
    text = _read_text(args.input)
    poly = parse_polygon_text(text, validate=not getattr(args, "no_validate", False))
    return classify(poly)


def _verify_document(doc: SolutionDocument, samples: int) -> bool:
    hidden_report = check_hidden_set(doc.polygon, doc.hidden)
    if doc.cover.mode is CoverMode.FULL:
        cover_report = check_cover(doc.polygon, doc.cover, samples=samples)
    else:
        cover_report = check_vertex_cover(doc.polygon, doc.cover)
    sizes_match = len(doc.hidden) == len(doc.cover)
    ratio_ok = len(doc.cover) <= 2 * len(doc.hidden)
    doc.verification = {
        "hidden_set_valid": hidden_report.valid,
        "cover_valid": cover_report.valid,
        "homestead": hidden_report.valid and cover_report.valid and sizes_match,
        "cover_at_most_twice_hidden": ratio_ok,
        "violations": violations_to_json(hidden_report.violations
                                         + cover_report.violations),
    }
    if doc.kind == "funnel":
        return doc.verification["homestead"]
    return hidden_report.valid and cover_report.valid and ratio_ok


def cmd_classify(args) -> int:
    try:
        cl = _load_polygon(args)
    except NotSimpleError as exc:
        print(f"not-simple: {exc}")
        return 0
    if cl.kind is PolygonClass.FUNNEL:
        print(f"funnel t={cl.t} n={cl.funnel.n}")
    elif cl.kind is PolygonClass.PSEUDOTRIANGLE:
        print(f"pseudotriangle t={cl.t} s={cl.s} n={cl.pseudotriangle.n}")
    else:
        print("other-simple")
    return 0


def _solve_command(args, variant: str) -> int:
    cl = _load_polygon(args)
    if cl.kind is not PolygonClass.FUNNEL:
        print(f"error: input is {cl.kind.value}, expected a funnel "
              f"(use pseudo-approx for pseudotriangles)", file=sys.stderr)
        return 1
    funnel = cl.funnel
    t0 = time.perf_counter()
    sol = solve_funnel(funnel) if variant == "full" else solve_funnel_vertices(funnel)
    elapsed = time.perf_counter() - t0
    doc = SolutionDocument(polygon=funnel.base, kind="funnel", variant=variant,
                           hidden=sol.hidden, cover=sol.cover,
                           split_point=sol.split_point, stats=sol.stats,
                           elapsed_seconds=elapsed)
    ok = _verify_document(doc, args.samples)
    _write_text(args.output, doc.dumps())
    print(f"|H| = {len(sol.hidden)}, |C| = {len(sol.cover)}, "
          f"verification {'valid' if ok else 'FAILED'}", file=sys.stderr)
    return 0 if ok else 2


def cmd_solve(args) -> int:
    return _solve_command(args, "full")


def cmd_solve_vertices(args) -> int:
    return _solve_command(args, "vertex")


def cmd_pseudo_approx(args) -> int:
    cl = _load_polygon(args)
    if cl.kind is not PolygonClass.PSEUDOTRIANGLE:
        print(f"error: input is {cl.kind.value}, expected a pseudotriangle "
              f"(funnels have an exact solver: solve)", file=sys.stderr)
        return 1
    ps = cl.pseudotriangle
    t0 = time.perf_counter()
    sol = solve_pseudo_vertices(ps) if args.vertices else solve_pseudo(ps)
    elapsed = time.perf_counter() - t0
    doc = SolutionDocument(polygon=ps.base, kind="pseudotriangle",
                           variant="vertex" if args.vertices else "full",
                           hidden=sol.hidden, cover=sol.cover,
                           split_point=sol.split_point, stats=sol.stats,
                           elapsed_seconds=elapsed)
    ok = _verify_document(doc, args.samples)
    _write_text(args.output, doc.dumps())
    print(f"|H| = {len(sol.hidden)}, |C| = {len(sol.cover)}, "
          f"verification {'valid' if ok else 'FAILED'}", file=sys.stderr)
    return 0 if ok else 2


def cmd_verify(args) -> int:
    doc = SolutionDocument.loads(_read_text(args.input))
    ok = _verify_document(doc, args.samples)
    print("valid" if ok else "INVALID")
    if args.output:
        _write_text(args.output, doc.dumps())
    return 0 if ok else 2


def cmd_oracle_hvs(args) -> int:
    # Indices refer to the input polygon's own (normalized) vertex order.
    poly = parse_polygon_text(_read_text(args.input),
                              validate=not args.no_validate)
    size, chosen = brute_force_hvs(poly, limit=args.limit)
    print(size)
    print("{" + ", ".join(str(i) for i in chosen) + "}")
    return 0


def cmd_gen(args) -> int:
    if args.family == "funnel":
        if args.n is None:
            print("error: gen funnel needs --n", file=sys.stderr)
            return 1
        cfg = GenConfig(n=args.n, seed=args.seed, coord_range=args.coord_range)
        poly = gen_funnel(cfg).base
    else:
        if args.chains is None:
            print("error: gen pseudo needs --chains n1,n2,n3", file=sys.stderr)
            return 1
        sizes = tuple(int(x) for x in args.chains.split(","))
        if len(sizes) != 3:
            print("error: --chains wants three comma-separated sizes", file=sys.stderr)
            return 1
        cfg = GenConfig(chains=sizes, seed=args.seed, coord_range=args.coord_range)
        poly = gen_pseudotriangle(cfg).base
    _write_text(args.output, emit_polygon_text(poly))
    return 0


def cmd_render(args) -> int:
    doc = SolutionDocument.loads(_read_text(args.input))
    _write_text(args.output, render_svg(doc))
    return 0


def cmd_bench(args) -> int:
    sizes = [int(x) for x in args.sizes.split(",")]
    rows = run_bench(sizes, seed=args.seed, reps=args.reps)
    print(format_table(rows))
    if args.output:
        write_csv(rows, args.output)
        figure = str(Path(args.output).with_suffix(".png"))
        write_figure(rows, figure)
        print(f"wrote {args.output} and {figure}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hiddencover",
        description="Hidden sets and convex covers in funnel polygons and "
                    "pseudotriangles, with verification oracles.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, output_default=None):
        p.add_argument("--input", required=True, help="input file ('-' for stdin)")
        p.add_argument("--output", default=output_default,
                       help="output file ('-' for stdout)")

    p = sub.add_parser("classify", help="classify a polygon file")
    p.add_argument("--input", required=True)
    p.add_argument("--no-validate", action="store_true",
                   help="skip the quadratic simplicity check")
    p.set_defaults(func=cmd_classify)

    for name, func in (("solve", cmd_solve), ("solve-vertices", cmd_solve_vertices)):
        p = sub.add_parser(name, help=f"{name} a funnel polygon")
        add_common(p)
        p.add_argument("--samples", type=int, default=1000,
                       help="coverage sample count for verification")
        p.add_argument("--no-validate", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("pseudo-approx", help="2-approximation for pseudotriangles")
    add_common(p)
    p.add_argument("--vertices", action="store_true", help="hidden-vertex-set variant")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--no-validate", action="store_true")
    p.set_defaults(func=cmd_pseudo_approx)

    p = sub.add_parser("verify", help="re-verify a solution document")
    p.add_argument("--input", required=True)
    p.add_argument("--output", default=None,
                   help="rewrite the document with fresh verdicts")
    p.add_argument("--samples", type=int, default=1000)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle-hvs", help="exact maximum hidden vertex set")
    p.add_argument("--input", required=True)
    p.add_argument("--limit", type=int, default=18)
    p.add_argument("--no-validate", action="store_true")
    p.set_defaults(func=cmd_oracle_hvs)

    p = sub.add_parser("gen", help="generate a polygon")
    p.add_argument("family", choices=("funnel", "pseudo"))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--chains", default=None, help="n1,n2,n3 chain edge counts")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--coord-range", type=int, default=None)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("render", help="render a solution document to SVG")
    add_common(p)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("bench", help="predicate-count and wall-time scaling")
    p.add_argument("--sizes", required=True, help="comma-separated vertex counts")
    p.add_argument("--seed", type=int, default=9)
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--output", default=None, help="CSV path (figure written beside it)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors; we use 1
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except (ParseError, FileNotFoundError, BruteForceLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
