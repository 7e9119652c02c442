"""Command-line interface.

Exit codes: 0 on success, 1 when a validity check fails (or a witness is
rejected by ``check``), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict
from pathlib import Path

from .bounds import BoundNotApplicable, evaluate_all
from .exact import (
    SolverLimitError,
    chromatic_number,
    hadwiger_witness,
    has_acyclic_contraction_to_any_clique,
    verify_minor_witness,
)
from .experiment import (
    ALL_CHECKS,
    ExperimentConfig,
    Limits,
    Source,
    default_suite,
    emit_report,
    load_configs,
    run_suite,
)
from .families import FamilySpec, build_family
from .graph import GraphError
from .io import ParseError, parse_graph, parse_partition, serialize_graph, serialize_partition


def _read_graph(path: str):
    return parse_graph(Path(path).read_text())


def cmd_bound(args) -> int:
    g = _read_graph(args.file)
    acyclic = None
    if args.acyclic:
        acyclic = has_acyclic_contraction_to_any_clique(g)
    report = asdict(evaluate_all(g, acyclic))
    report["reduced_class"] = report["reduced_class"].value
    print(json.dumps(report, indent=2))
    return 0


def cmd_exact(args) -> int:
    g = _read_graph(args.file)
    both = not (args.chi or args.hadwiger)
    if args.chi or both:
        print(f"chi {chromatic_number(g)}")
    if args.hadwiger or both:
        try:
            w = hadwiger_witness(g, max_n=args.max_n, time_budget=args.time_budget)
        except SolverLimitError as e:
            print(f"h >= {e.best} ({e})")
            if e.witness is not None:
                sys.stdout.write(serialize_partition(e.witness))
            return 0
        print(f"h {len(w)}")
        sys.stdout.write(serialize_partition(w))
    return 0


def cmd_family(args) -> int:
    spec = FamilySpec(args.kind, r=args.r, n=args.n, k=args.k)
    text = serialize_graph(build_family(spec))
    if args.emit:
        Path(args.emit).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_check(args) -> int:
    g = _read_graph(args.file)
    w = parse_partition(Path(args.witness).read_text())
    if verify_minor_witness(g, w):
        print(f"valid: h >= {len(w)}")
        return 0
    print("invalid witness")
    return 1


def cmd_experiment(args) -> int:
    if args.config:
        configs = load_configs(args.config)
        if args.seed is not None:
            configs = [ExperimentConfig(c.source, args.seed, c.checks, c.limits) for c in configs]
    elif args.source == "suite":
        configs = default_suite(args.seed or 0)
    else:
        if args.source is None:
            raise argparse.ArgumentTypeError("give --config or --source")
        family = None
        if args.source == "family":
            family = FamilySpec(args.kind, r=args.r, n=args.n, k=args.k)
        src = Source(args.source, n=args.n, p=args.p, samples=args.samples, family=family)
        checks = tuple(args.checks.split(",")) if args.checks else ALL_CHECKS
        limits = Limits(max_exact_n=args.max_exact_n, time_budget=args.time_budget)
        configs = [ExperimentConfig(src, args.seed or 0, checks, limits)]
    rows = run_suite(configs, jobs=args.jobs)
    text = emit_report(rows, args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 1 if any(r.validity_violations for r in rows) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hadwiger", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="print all bound values for a graph file")
    p.add_argument("file")
    p.add_argument("--acyclic", action="store_true", help="also decide the acyclic-contraction flag")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("exact", help="exact chromatic and/or Hadwiger number")
    p.add_argument("file")
    p.add_argument("--chi", action="store_true")
    p.add_argument("--hadwiger", action="store_true")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--time-budget", type=float, default=None)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("family", help="build a named construction")
    p.add_argument("--kind", required=True, choices=["d", "fig1a", "treeclique"])
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--emit", help="write the graph file here instead of stdout")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("check", help="verify a clique-minor witness")
    p.add_argument("file")
    p.add_argument("--witness", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("experiment", help="run bound-vs-exact experiments")
    p.add_argument("--config", help="JSON config (object or list of objects)")
    p.add_argument("--source", choices=["exhaustive", "random", "family", "suite"])
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--samples", type=int)
    p.add_argument("--kind", choices=["d", "fig1a", "treeclique"], default="d")
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--checks", help=f"comma list from {','.join(ALL_CHECKS)}")
    p.add_argument("--seed", type=int)
    p.add_argument("--max-exact-n", type=int, default=10)
    p.add_argument("--time-budget", type=float, default=None)
    p.add_argument("--format", choices=["csv", "table"], default="csv")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (ParseError, GraphError, BoundNotApplicable, ValueError, OSError, argparse.ArgumentTypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
