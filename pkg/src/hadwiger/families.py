"""Deterministic constructions: the D_{r,n} family and tree-clique counterexamples."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exact import MinorWitness
from .graph import Graph, GraphError

FAMILY_KINDS = ("D", "Figure1a", "TreeClique")
_ALIASES = {"d": "D", "fig1a": "Figure1a", "figure1a": "Figure1a", "treeclique": "TreeClique"}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    r: int | None = None
    n: int | None = None
    k: int | None = None

    def __post_init__(self) -> None:
        kind = _ALIASES.get(self.family.lower(), self.family)
        if kind not in FAMILY_KINDS:
            raise GraphError(f"unknown family {self.family!r}")
        object.__setattr__(self, "family", kind)

    @property
    def label(self) -> str:
        if self.family == "D":
            return f"D-r{self.r}-n{self.n}"
        if self.family == "TreeClique":
            return f"TreeClique-k{self.k}"
        return "Figure1a"


def d_r_n_edges(r: int, n: int) -> list[tuple[int, int]]:
    if r < 3 or n < r:
        raise GraphError(f"D_(r,n) needs r >= 3 and n >= r, got r={r}, n={n}")
    edges = []
    # column edges: r*i + j -- r*(i-1) + j
    for x in range(r, n):
        edges.append((x - r, x))
    # cross edges: r*i + j -- r*j + i for i < j < r
    for i, j in combinations(range(r), 2):
        a, b = r * i + j, r * j + i
        if b <= n - 1:
            edges.append((a, b))
    return edges


def build_d_r_n(r: int, n: int) -> Graph:
    """D_{r,n}: max degree 3, 2-degenerate in natural order, K_r minor once n >= r^2 - 1."""
    return Graph.from_edges(n, d_r_n_edges(r, n))


def d_r_n_witness(r: int, n: int) -> MinorWitness:
    """Column classes ``{r*i + j}`` for each ``j``; a K_r witness when n >= r^2 - 1."""
    if r < 3:
        raise GraphError("r must be at least 3")
    # largest cross label needed is r(r-1) + (r-2) = r^2 - 2
    if n < r * r - 1:
        raise GraphError(f"witness not guaranteed for n={n} < r^2 - 1 = {r * r - 1}")
    return MinorWitness.of(range(j, n, r) for j in range(r))


FIGURE_1A_EDGES = [
    (0, 1), (2, 3), (4, 5), (6, 7),  # the four trees AB, CD, EF, GH
    (0, 2), (1, 5), (0, 6), (3, 7), (4, 7), (3, 4),
]


def build_figure_1a() -> Graph:
    """Eight vertices A..H as 0..7; n=8, m=10, minimum degree 2, h=4."""
    return Graph.from_edges(8, FIGURE_1A_EDGES)


def build_tree_clique_counterexample(k: int) -> Graph:
    """k disjoint edges ``(2t, 2t+1)`` plus exactly one edge between every two of them.

    The endpoint used in pair ``t`` alternates between ``2t`` and ``2t+1`` in
    the order pairs-of-pairs are visited, so every vertex gets an inter-pair
    edge (each pair has k-1 >= 2 of them).
    """
    if k < 3:
        raise GraphError("tree-clique construction needs k >= 3")
    used = [0] * k
    edges = [(2 * t, 2 * t + 1) for t in range(k)]
    for a, b in combinations(range(k), 2):
        edges.append((2 * a + used[a] % 2, 2 * b + used[b] % 2))
        used[a] += 1
        used[b] += 1
    return Graph.from_edges(2 * k, edges)


def tree_clique_witness(k: int) -> MinorWitness:
    return MinorWitness.of((2 * t, 2 * t + 1) for t in range(k))


def build_family(spec: FamilySpec) -> Graph:
    if spec.family == "D":
        if spec.r is None or spec.n is None:
            raise GraphError("family D needs r and n")
        return build_d_r_n(spec.r, spec.n)
    if spec.family == "TreeClique":
        if spec.k is None:
            raise GraphError("family TreeClique needs k")
        return build_tree_clique_counterexample(spec.k)
    return build_figure_1a()


def family_witness(spec: FamilySpec) -> MinorWitness | None:
    """The construction's built-in witness, or None when none is guaranteed."""
    if spec.family == "D":
        if spec.n < spec.r * spec.r - 1:
            return None
        return d_r_n_witness(spec.r, spec.n)
    if spec.family == "TreeClique":
        return tree_clique_witness(spec.k)
    return tree_clique_witness(4)
