"""Command-line front end.

Exit codes: 0 success / all selected theorems hold, 1 counterexample found,
2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .enumeration import (
    EnumConfig,
    enumerate_full_submsets,
    enumerate_submsets,
    enumerate_topologies,
    enumerate_whole_submsets,
)
from .errors import AxiomViolation, MTopoError
from .mset import MSet, MSpace, make_mset, parse_counts
from .operators import apply, limit_points
from .search import SearchConfig, search_counterexample
from .spacefile import dump_space, load_space, mset_from_json, space_to_dict
from .theorems import DEFAULT_MAX_SUBMSETS, THEOREM_IDS, check_space, normalize_id

EXIT_OK, EXIT_FOUND, EXIT_USAGE = 0, 1, 2
OPS = ("interior", "closure", "exterior", "boundary", "limit-points")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(obj, fmt, text):
    if fmt == "json":
        print(json.dumps(obj, ensure_ascii=False))
    else:
        print(text)


def _set_literal(text: str, space: MSpace) -> MSet:
    stripped = text.strip()
    if stripped.startswith('{"'):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise MTopoError(f"bad element-map literal: {exc.msg}") from exc
        return mset_from_json(obj, space)
    return make_mset(space, parse_counts(stripped))


def cmd_validate(args) -> int:
    topo = load_space(args.file)
    print(dump_space(topo))
    return EXIT_OK


def cmd_compute(args) -> int:
    topo = load_space(args.file)
    a = _set_literal(args.set, topo.space)
    if args.op == "limit-points":
        pts = [str(p) for p in limit_points(topo, a)]
        _emit({"op": args.op, "input": str(a), "points": pts}, args.format, "[" + ", ".join(pts) + "]")
    else:
        res = apply(topo, args.op, a)
        _emit(
            {"op": args.op, "input": str(a), "output": str(res.output)},
            args.format,
            str(res.output),
        )
    return EXIT_OK


def cmd_verify(args) -> int:
    topo = load_space(args.file)
    ids = THEOREM_IDS if args.all else [normalize_id(t) for t in args.theorem]
    verdicts = [
        check_space(topo, tid, max_submsets=args.max_submsets, whole_only=args.whole_only)
        for tid in ids
    ]
    for v in verdicts:
        _emit(v.as_dict(), args.format, v.line())
    return EXIT_OK if all(v.holds for v in verdicts) else EXIT_FOUND


def _ground_from_literal(text: str, w: int | None) -> MSet:
    counts = parse_counts(text)
    cap = w if w is not None else max(counts.values(), default=1) or 1
    return make_mset(MSpace(tuple(counts), cap), counts)


def cmd_enumerate(args) -> int:
    ground = _ground_from_literal(args.ground, args.w)
    if args.topologies:
        kind = "topologies"
        items = enumerate_topologies(ground, EnumConfig(max_submsets=args.max_submsets))
        render = str
        as_json = lambda t: [str(u) for u in t.opens]  # noqa: E731
    else:
        kind, fn = {
            "whole": ("whole", enumerate_whole_submsets),
            "full": ("full", enumerate_full_submsets),
        }.get(args.kind, ("submsets", enumerate_submsets))
        items = fn(ground)
        render = as_json = str
    if args.count:
        n = sum(1 for _ in items)
        _emit({kind: n}, args.format, f"{kind}={n}")
        return EXIT_OK
    for item in items:
        _emit(as_json(item), args.format, render(item))
    return EXIT_OK


def cmd_search(args) -> int:
    cfg = SearchConfig(
        max_domain=args.max_domain,
        max_w=args.max_w,
        exhaustive=args.seed is None,
        seed=args.seed,
        budget=args.budget,
        max_submsets=args.max_submsets,
        workers=args.workers,
        whole_only=args.whole_only,
    )
    report = search_counterexample(normalize_id(args.theorem), cfg)
    if args.format == "json":
        out = report.as_dict()
        if not report.verdict.holds:
            out["space"] = space_to_dict(report.verdict.witness.topology)
        print(json.dumps(out, ensure_ascii=False))
    else:
        print(report.line())
        if not report.verdict.holds:
            print("space: " + dump_space(report.verdict.witness.topology, compact=True))
    return EXIT_OK if report.verdict.holds else EXIT_FOUND


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mtopo", description="Multiset topology operators and theorem checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("validate", help="check a space file and echo it canonically")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("compute", help="apply an operator to a sub-M-set")
    sp.add_argument("file")
    sp.add_argument("--op", required=True, choices=OPS)
    sp.add_argument("--set", required=True, help="multiset literal such as {1/a,3/b}")
    fmt(sp)
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("verify", help="check theorems over every sub-M-set of a space")
    sp.add_argument("file")
    sel = sp.add_mutually_exclusive_group(required=True)
    sel.add_argument("--theorem", action="append", help="theorem id, e.g. 3.9iii or R3.7")
    sel.add_argument("--all", action="store_true")
    sp.add_argument("--whole-only", action="store_true", help="quantify over whole sub-M-sets only")
    sp.add_argument("--max-submsets", type=int, default=DEFAULT_MAX_SUBMSETS)
    fmt(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("enumerate", help="list or count sub-M-sets or topologies")
    sp.add_argument("--ground", required=True)
    sp.add_argument("--w", type=int)
    kind = sp.add_mutually_exclusive_group()
    kind.add_argument("--whole", dest="kind", action="store_const", const="whole")
    kind.add_argument("--full", dest="kind", action="store_const", const="full")
    kind.add_argument("--topologies", action="store_true")
    sp.add_argument("--count", action="store_true")
    sp.add_argument("--max-submsets", type=int, default=EnumConfig().max_submsets)
    fmt(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("search", help="look for a counterexample over small spaces")
    sp.add_argument("--theorem", required=True)
    sp.add_argument("--max-domain", type=int, default=2)
    sp.add_argument("--max-w", type=int, default=2)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="enumerate every space (default)")
    mode.add_argument("--seed", type=int, help="draw random spaces from this seed instead")
    sp.add_argument("--budget", type=int, help="maximum number of spaces to check")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--max-submsets", type=int, default=SearchConfig().max_submsets)
    sp.add_argument("--whole-only", action="store_true")
    fmt(sp)
    sp.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except AxiomViolation as exc:
        witness = " ".join(str(m) for m in exc.witness)
        print(f"{type(exc).__name__}: {exc} [witness: {witness}]", file=sys.stderr)
    except (MTopoError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        if getattr(exc, "coverage", None):
            cov = " ".join(f"{k}={v}" for k, v in exc.coverage.items())
            print(f"coverage: {cov}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
