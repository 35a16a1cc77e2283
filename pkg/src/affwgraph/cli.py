"""
Command-line surface.

    affwgraph build 3 2 --format dot
    affwgraph build 3 3 --variant p=0
    affwgraph verify 3 3 --variant p=0 --hecke --rules
    affwgraph verify --input candidate.json
    affwgraph restrict 3 2 --to 1..4 --format json
    affwgraph cells 3 2 --restrict 1..4
    affwgraph export 4 2 --output outdir
    affwgraph regress --max-n 8 --jobs 4

Exit status: 0 on success or a passing verification, 1 on verification
failure (a JSON report is printed), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .tableaux import Partition, pint
from .tworow import (
    build_affine_graph,
    build_dual_equiv,
    build_equal_variant,
    build_finite_graph,
)
from .verify import check_all_rules, check_hecke_relations, classify_restriction_cells
from .wgraph import (
    LabeledWGraph,
    cells,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    restrict_parabolic,
)

__all__ = ["main"]


class UsageError(Exception):
    pass


def _shape(args) -> Partition:
    try:
        return Partition(tuple(args.shape))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _variant_weight(text: str) -> int:
    if not text.startswith("p="):
        raise UsageError(f"--variant expects p=K, got {text!r}")
    try:
        p = int(text[2:])
    except ValueError:
        raise UsageError(f"--variant expects an integer weight, got {text!r}") from None
    if p < 0:
        raise UsageError("variant weight must be nonnegative")
    return p


def _build(args) -> LabeledWGraph:
    shape = _shape(args)
    if getattr(args, "variant", None) is not None:
        return build_equal_variant(shape, _variant_weight(args.variant))
    kind = getattr(args, "kind", "affine")
    if kind == "affine":
        return build_affine_graph(shape)
    if kind == "dual-equiv":
        return build_dual_equiv(shape)
    if kind == "finite":
        return build_finite_graph(shape)
    raise UsageError(f"unknown graph kind {kind!r}")


def _render(g: LabeledWGraph, fmt: str, name: str) -> str:
    if fmt == "json":
        return json.dumps(graph_to_json(g), indent=1, sort_keys=True) + "\n"
    if fmt == "dot":
        return graph_to_dot(g, name)
    raise UsageError(f"unknown format {fmt!r}")


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _parse_interval(text: str, n: int) -> list[int]:
    """Parse "a..b" as the cyclic residue interval from a to b."""
    parts = text.split("..")
    if len(parts) != 2:
        raise UsageError(f"interval must look like a..b, got {text!r}")
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise UsageError(f"interval bounds must be integers: {text!r}") from None
    if not (1 <= a <= n and 1 <= b <= n):
        raise UsageError(f"interval bounds must lie in 1..{n}")
    return sorted(pint(a, b, n))


def _graph_name(args, suffix: str = "") -> str:
    return "gamma_" + "_".join(str(p) for p in args.shape) + suffix


def cmd_build(args) -> int:
    _emit(_render(_build(args), args.format, _graph_name(args)), args.output)
    return 0


def cmd_verify(args) -> int:
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            g = graph_from_json(json.load(fh))
        name = args.input
    else:
        if not args.shape:
            raise UsageError("verify needs a shape or --input FILE")
        g = _build(args)
        name = _graph_name(args)
    run_rules = args.rules or not args.hecke
    run_hecke = args.hecke or not args.rules
    reports = []
    if run_rules:
        reports.extend(check_all_rules(g))
    if run_hecke:
        reports.append(check_hecke_relations(g))
    passed = all(r.passed for r in reports)
    _emit(
        json.dumps(
            {"graph": name, "passed": passed, "reports": [r.to_json() for r in reports]},
            indent=1,
            sort_keys=True,
        )
        + "\n",
        args.output,
    )
    return 0 if passed else 1


def cmd_restrict(args) -> int:
    g = _build(args)
    j_set = _parse_interval(args.to, g.n)
    _emit(
        _render(restrict_parabolic(g, j_set), args.format, _graph_name(args, "_restricted")),
        args.output,
    )
    return 0


def cmd_cells(args) -> int:
    shape = _shape(args)
    g = _build(args)
    finite_restriction = False
    if args.restrict:
        j_set = _parse_interval(args.restrict, g.n)
        finite_restriction = j_set == list(range(1, g.n))
        g = restrict_parabolic(g, j_set)
    listing = []
    if finite_restriction and getattr(args, "variant", None) is None:
        for key, cell in sorted(
            classify_restriction_cells(shape).items(), key=lambda kv: kv[0].parts
        ):
            listing.append(
                {
                    "key": list(key.parts),
                    "size": len(cell.vertices),
                    "vertices": [graph_to_json(cell)["vertices"][k]["rows"]
                                 for k in range(len(cell.vertices))],
                }
            )
    else:
        for cell in cells(g):
            listing.append(
                {
                    "size": len(cell.vertices),
                    "vertices": [[list(row) for row in t.rows] for t in cell.vertices],
                }
            )
    _emit(
        json.dumps({"count": len(listing), "cells": listing}, indent=1, sort_keys=True) + "\n",
        args.output,
    )
    return 0


def cmd_export(args) -> int:
    g = _build(args)
    outdir = Path(args.output or ".")
    outdir.mkdir(parents=True, exist_ok=True)
    name = _graph_name(args)
    (outdir / f"{name}.json").write_text(_render(g, "json", name), encoding="utf-8")
    (outdir / f"{name}.dot").write_text(_render(g, "dot", name), encoding="utf-8")
    sys.stdout.write(f"wrote {name}.json and {name}.dot to {outdir}\n")
    return 0


def cmd_regress(args) -> int:
    from .regress import run_regression

    results = run_regression(max_n=args.max_n, jobs=args.jobs)
    width = max(len(r.name) for r in results)
    ok = True
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        sys.stdout.write(f"{r.name:<{width}}  {status}  {r.detail}\n")
        ok = ok and r.passed
    return 0 if ok else 1


def _add_shape(parser, required=True):
    nargs = 2 if required else "*"
    parser.add_argument("shape", type=int, nargs=nargs, metavar="PART",
                        help="two-row shape as two integers, e.g. 3 2")


def _add_io(parser):
    parser.add_argument("--format", choices=("json", "dot"), default="json")
    parser.add_argument("--output", metavar="PATH", help="write to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affwgraph",
        description="Build and verify the two-row affine W-graphs.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("build", help="construct a graph and print it")
    _add_shape(p)
    p.add_argument("--kind", choices=("affine", "dual-equiv", "finite"), default="affine")
    p.add_argument("--variant", metavar="p=K",
                   help="equal-row variant with cross-component weight K")
    _add_io(p)
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("verify", help="run the rule and module checks")
    _add_shape(p, required=False)
    p.add_argument("--variant", metavar="p=K")
    p.add_argument("--rules", action="store_true", help="only the four local rules")
    p.add_argument("--hecke", action="store_true", help="only the module relations")
    p.add_argument("--input", metavar="FILE", help="verify a graph from a JSON file")
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("restrict", help="parabolic restriction to a residue interval")
    _add_shape(p)
    p.add_argument("--to", metavar="a..b", required=True,
                   help="generator subset as a cyclic interval")
    p.add_argument("--variant", metavar="p=K")
    _add_io(p)
    p.set_defaults(fn=cmd_restrict)

    p = sub.add_parser("cells", help="strongly connected components")
    _add_shape(p)
    p.add_argument("--restrict", metavar="a..b",
                   help="restrict first; 1..n-1 keys cells by insertion shape")
    p.add_argument("--variant", metavar="p=K")
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(fn=cmd_cells)

    p = sub.add_parser("export", help="write JSON and DOT files")
    _add_shape(p)
    p.add_argument("--kind", choices=("affine", "dual-equiv", "finite"), default="affine")
    p.add_argument("--variant", metavar="p=K")
    p.add_argument("--output", metavar="DIR")
    p.set_defaults(fn=cmd_export)

    p = sub.add_parser("regress", help="run the full property regression")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_regress)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
