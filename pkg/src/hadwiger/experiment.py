"""Experiment runner: source graphs, evaluate bounds against exact values, flag violations.

Violation tokens come in two kinds.  Validity tokens (``thm1``, ``thm3``,
``eq6``, ``obs1``, ``chi:<bound>``) mean a proven inequality failed and
indicate a bug.  Informational tokens record expected non-interpolation
(``noninterp:<bound>``), a failed D_{r,n} witness (``thm4``) or a
Hadwiger-conjecture failure (``hc``).  A token is only emitted when the
inequality is certified: either both sides are exact or a verified witness
lower bound already exceeds the bound.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb, isqrt
from pathlib import Path
from typing import Iterable, Iterator

from .bounds import BoundReport, ek_bound, evaluate_all
from .exact import (
    CHROMATIC_MAX_N,
    MinorWitness,
    SolverLimitError,
    chromatic_number,
    greedy_minor_witness,
    hadwiger_witness,
    has_acyclic_contraction_to_any_clique,
    has_acyclic_contraction_to_clique,
    has_acyclic_contraction_to_cycle,
    verify_minor_witness,
)
from .families import FamilySpec, build_family, family_witness
from .generate import enumerate_connected, random_connected_graph
from .graph import Graph

log = logging.getLogger(__name__)

ALL_CHECKS = ("thm1", "thm2", "thm3", "thm4", "obs1", "chi_bounds", "hadwiger_conjecture_spotcheck")
VALIDITY_TOKENS = ("thm1", "thm3", "eq6", "obs1")
THM2_BOUNDS = ("brooks", "welsh_powell", "stacho_delta2", "stacho_s")

CSV_COLUMNS = (
    "graph_id", "n", "m", "delta", "delta2", "s", "chi", "h", "h_certified_lower",
    "ek", "chs_sqrt", "improved", "brooks", "welsh_powell", "stacho_delta2",
    "stacho_s", "reduced_class", "acyclic_clique", "violations",
)


@dataclass(frozen=True)
class Source:
    kind: str  # exhaustive | random | family
    n: int | None = None
    p: float | None = None
    samples: int | None = None
    family: FamilySpec | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("exhaustive", "random", "family"):
            raise ValueError(f"unknown source kind {self.kind!r}")
        if self.kind in ("exhaustive", "random") and self.n is None:
            raise ValueError(f"{self.kind} source needs n")
        if self.kind == "random" and (self.p is None or self.samples is None):
            raise ValueError("random source needs p and samples")
        if self.kind == "family" and self.family is None:
            raise ValueError("family source needs a family spec")


@dataclass(frozen=True)
class Limits:
    max_exact_n: int = 10
    # wall-clock budget per exact Hadwiger solve; None keeps output deterministic
    time_budget: float | None = None


@dataclass(frozen=True)
class ExperimentConfig:
    source: Source
    seed: int = 0
    checks: tuple[str, ...] = ALL_CHECKS
    limits: Limits = field(default_factory=Limits)

    def __post_init__(self) -> None:
        unknown = set(self.checks) - set(ALL_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")

    @classmethod
    def from_dict(cls, d: dict) -> ExperimentConfig:
        src = dict(d["source"])
        if "family" in src and src["family"] is not None:
            src["family"] = FamilySpec(**src["family"])
        return cls(
            source=Source(**src),
            seed=int(d.get("seed", 0)),
            checks=tuple(d.get("checks", ALL_CHECKS)),
            limits=Limits(**d.get("limits", {})),
        )


def load_configs(path: str | Path) -> list[ExperimentConfig]:
    """Read one config object, or a list of them, from a JSON file."""
    data = json.loads(Path(path).read_text())
    if isinstance(data, dict):
        data = [data]
    return [ExperimentConfig.from_dict(d) for d in data]


@dataclass(frozen=True)
class ExperimentRow:
    graph_id: str
    n: int
    m: int
    delta: int
    delta2: int | None
    s: int | None
    chi: int | None
    h: int | None
    h_certified_lower: int | None
    ek: int
    chs_sqrt: int
    improved: int | None
    brooks: int
    welsh_powell: int
    stacho_delta2: int | None
    stacho_s: int | None
    reduced_class: str
    acyclic_clique: bool | None
    violations: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def validity_violations(self) -> list[str]:
        return [t for t in self.violations if t in VALIDITY_TOKENS or t.startswith("chi:")]


# Sources


def source_graphs(cfg: ExperimentConfig) -> Iterator[tuple[str, Graph, FamilySpec | None]]:
    src = cfg.source
    if src.kind == "exhaustive":
        for i, g in enumerate(enumerate_connected(src.n)):
            yield f"exh-n{src.n}-{i:07d}", g, None
    elif src.kind == "random":
        master = random.Random(cfg.seed)
        for i in range(src.samples):
            g = random_connected_graph(src.n, src.p, master.getrandbits(64))
            yield f"rnd-n{src.n}-p{src.p}-s{cfg.seed}-{i:06d}", g, None
    else:
        spec = src.family
        if spec.family == "D" and spec.r is None:
            spec = FamilySpec("D", r=isqrt(spec.n), n=spec.n)
        yield f"fam-{spec.label}", build_family(spec), spec


# Evaluation


def _exact_acyclic(g: Graph, limit: int) -> bool | None:
    if g.n > limit:
        return None
    return has_acyclic_contraction_to_any_clique(g, max_n=limit)


def evaluate_graph(
    graph_id: str, g: Graph, cfg: ExperimentConfig, spec: FamilySpec | None = None
) -> ExperimentRow:
    checks = set(cfg.checks)
    limits = cfg.limits
    notes: list[str] = []
    viol: list[str] = []

    need_acyclic = "thm3" in checks
    report: BoundReport = evaluate_all(g)
    acyclic = _exact_acyclic(g, limits.max_exact_n) if need_acyclic else None

    # Hadwiger number: exact within limits, else best verified witness
    h = None
    witnesses: list[MinorWitness] = []
    if g.n <= limits.max_exact_n:
        try:
            w = hadwiger_witness(g, max_n=limits.max_exact_n, time_budget=limits.time_budget)
            h = len(w)
            witnesses.append(w)
        except SolverLimitError as e:
            notes.append(f"hadwiger: {e}")
            if e.witness is not None:
                witnesses.append(e.witness)
    else:
        witnesses.append(greedy_minor_witness(g))
    thm4_ok = None
    if spec is not None:
        fw = family_witness(spec)
        if fw is not None:
            accepted = verify_minor_witness(g, fw)
            if accepted:
                witnesses.append(fw)
            if spec.family == "D":
                thm4_ok = accepted
    h_lower = max((len(w) for w in witnesses if verify_minor_witness(g, w)), default=None)
    if h is not None:
        h_lower = h
    h_known = h if h is not None else h_lower

    chi = None
    if g.n <= CHROMATIC_MAX_N:
        chi = chromatic_number(g)
    else:
        notes.append("chi: above exact limit")

    if "thm1" in checks and h_known is not None and h_known > report.ek:
        viol.append("thm1")

    if "thm2" in checks and h_known is not None:
        for name in THM2_BOUNDS:
            bound = getattr(report, name)
            if bound is not None and h_known > bound:
                viol.append(f"noninterp:{name}")

    if "thm3" in checks and report.improved is not None and h_known is not None:
        if h_known > report.improved:
            viol.append("thm3" if acyclic is False else "noninterp:improved")
        if acyclic is False and h is not None and g.m < g.n + 1 + comb(h, 2) - h:
            viol.append("eq6")

    if "thm4" in checks and thm4_ok is False:
        viol.append("thm4")

    if "obs1" in checks and g.n <= limits.max_exact_n:
        odd_cycle = any(
            has_acyclic_contraction_to_cycle(g, length, max_n=limits.max_exact_n)
            for length in range(3, g.n + 1, 2)
        )
        if odd_cycle and not has_acyclic_contraction_to_clique(g, 3, max_n=limits.max_exact_n):
            viol.append("obs1")

    if "chi_bounds" in checks and chi is not None:
        for name, bound in report.chi_bounds().items():
            if chi > bound:
                viol.append(f"chi:{name}")

    if "hadwiger_conjecture_spotcheck" in checks and chi is not None and h is not None and chi > h:
        viol.append("hc")

    return ExperimentRow(
        graph_id=graph_id,
        n=report.n,
        m=report.m,
        delta=report.delta,
        delta2=report.delta2,
        s=report.s,
        chi=chi,
        h=h,
        h_certified_lower=h_lower,
        ek=report.ek,
        chs_sqrt=report.chs_sqrt,
        improved=report.improved,
        brooks=report.brooks,
        welsh_powell=report.welsh_powell,
        stacho_delta2=report.stacho_delta2,
        stacho_s=report.stacho_s,
        reduced_class=report.reduced_class.value,
        acyclic_clique=acyclic,
        violations=tuple(viol),
        notes=tuple(notes),
    )


def _evaluate_task(args) -> ExperimentRow:
    return evaluate_graph(*args)


def run_experiment(cfg: ExperimentConfig, jobs: int = 1) -> list[ExperimentRow]:
    """Evaluate every graph of ``cfg``'s source; rows come back sorted by graph id."""
    return run_suite([cfg], jobs=jobs)


def run_suite(configs: Iterable[ExperimentConfig], jobs: int = 1) -> list[ExperimentRow]:
    tasks = ((gid, g, cfg, spec) for cfg in configs for gid, g, spec in source_graphs(cfg))
    if jobs <= 1:
        rows = [_evaluate_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_evaluate_task, tasks, chunksize=64))
    rows.sort(key=lambda r: r.graph_id)
    for r in rows:
        if r.validity_violations:
            log.warning("%s: %s", r.graph_id, ",".join(r.validity_violations))
    return rows


def default_suite(seed: int = 0) -> list[ExperimentConfig]:
    """All checks in one batch: exhaustive n <= 6, 1000 random n in {7, 8}, families."""
    everything = ALL_CHECKS
    configs = [ExperimentConfig(Source("exhaustive", n=n), seed, everything) for n in range(1, 7)]
    for n in (7, 8):
        for p in (0.35, 0.5, 0.7):
            samples = 167 if p != 0.7 else 166
            configs.append(ExperimentConfig(Source("random", n=n, p=p, samples=samples), seed, everything))
    fams = [FamilySpec("Figure1a"), FamilySpec("D", r=3, n=9), FamilySpec("D", r=5, n=24), FamilySpec("D", r=6, n=35)]
    fams += [FamilySpec("D", n=n) for n in (16, 25, 36, 49)]
    fams += [FamilySpec("TreeClique", k=k) for k in range(3, 9)]
    configs += [ExperimentConfig(Source("family", family=f), seed, everything) for f in fams]
    return configs


# Reporting


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, tuple):
        return ";".join(value)
    return str(value)


def emit_report(rows: Iterable[ExperimentRow], fmt: str = "csv") -> str:
    table = [[_cell(getattr(r, c)) for c in CSV_COLUMNS] for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        writer.writerows(table)
        return buf.getvalue()
    if fmt == "table":
        widths = [max([len(c)] + [len(row[i]) for row in table]) for i, c in enumerate(CSV_COLUMNS)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(CSV_COLUMNS, widths)).rstrip()]
        lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in table]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")


def tightness_probe(ns: Iterable[int] = (4, 5, 6)) -> list[tuple[int, int, int, int]]:
    """``(n, m, max h, ek_bound)`` for each ``n <= m <= C(n, 2)`` over all connected graphs."""
    out = []
    for n in ns:
        best: dict[int, int] = {}
        for g in enumerate_connected(n):
            if g.m >= n:
                best[g.m] = max(best.get(g.m, 0), len(hadwiger_witness(g)))
        out.extend((n, m, best[m], ek_bound(n, m)) for m in range(n, comb(n, 2) + 1))
    return out
