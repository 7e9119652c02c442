"""Immutable simple graphs on vertices ``0..n-1``.

All operations return new graphs; inputs are never mutated.  Vertex ids are
plain ints.  Algorithms that need speed use the per-vertex neighbour bitmasks
exposed by :attr:`Graph.masks`.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Sequence

DegreeSequence = tuple[int, ...]
Coloring = tuple[int, ...]


class GraphError(ValueError):
    """A precondition on a graph operation was violated."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} entries for n={self.n}")
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise GraphError(f"neighbour {v} of {u} out of range")
                if v == u:
                    raise GraphError(f"self-loop at {u}")
                if u not in self.adj[v]:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph; repeated edges collapse, self-loops are rejected."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> Graph:
        """Build from neighbour bitmasks without re-validating (internal fast path)."""
        g = object.__new__(cls)
        adj = tuple(
            frozenset(v for v in range(len(masks)) if mask >> v & 1) for mask in masks
        )
        object.__setattr__(g, "n", len(masks))
        object.__setattr__(g, "adj", adj)
        g.__dict__["masks"] = tuple(masks)
        return g

    @cached_property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in s) for s in self.adj)

    @cached_property
    def max_degree(self) -> int:
        return max((len(s) for s in self.adj), default=0)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# Small standard graphs


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Star on ``n`` vertices with centre 0."""
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


# Structural operations


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Contract edge ``{u, v}``.

    The merged vertex keeps id ``min(u, v)``; ids above ``max(u, v)`` shift
    down by one.  Parallel edges collapse.
    """
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    a, b = min(u, v), max(u, v)

    def relabel(x: int) -> int:
        if x == b:
            return a
        return x - 1 if x > b else x

    edges = set()
    for x, y in g.edges():
        x2, y2 = relabel(x), relabel(y)
        if x2 != y2:
            edges.add((min(x2, y2), max(x2, y2)))
    return Graph.from_edges(g.n - 1, edges)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, renumbered in ascending id order."""
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    return Graph(
        len(keep),
        tuple(frozenset(index[w] for w in g.adj[v] if w in index) for v in keep),
    )


def remove_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    drop = set(vertices)
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [], deque([s])
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    """True iff ``g`` has one component.  The empty graph counts as connected."""
    if g.n == 0:
        return True
    masks = g.masks
    return mask_closure(masks, 1, (1 << g.n) - 1) == (1 << g.n) - 1


def mask_closure(masks: Sequence[int], start: int, within: int) -> int:
    """Vertices reachable from bitmask ``start`` using only vertices in ``within``."""
    reached = start & within
    frontier = reached
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= masks[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & within & ~reached
        reached |= frontier
    return reached


def mask_connected(masks: Sequence[int], subset: int) -> bool:
    """True iff the vertices in bitmask ``subset`` induce a connected subgraph."""
    if subset == 0:
        return True
    return mask_closure(masks, subset & -subset, subset) == subset


def degree_sequence(g: Graph) -> DegreeSequence:
    return tuple(sorted((len(s) for s in g.adj), reverse=True))


def one_reduce(g: Graph) -> Graph:
    """Strip vertices of degree <= 1 until none remain (the 2-core).

    Survivors are renumbered in ascending id order, so the result does not
    depend on deletion order.
    """
    deg = [len(s) for s in g.adj]
    alive = [True] * g.n
    queue = deque(v for v in range(g.n) if deg[v] <= 1)
    while queue:
        v = queue.popleft()
        if not alive[v]:
            continue
        alive[v] = False
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    return induced_subgraph(g, (v for v in range(g.n) if alive[v]))


class ReducedClass(enum.Enum):
    CLIQUE = "clique"
    ODD_CYCLE = "odd_cycle"
    OTHER = "other"


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(len(s) == 2 for s in g.adj) and is_connected(g)


def classify_reduced(g: Graph) -> ReducedClass:
    """Classify the 2-core of ``g`` as a clique, an odd cycle, or neither.

    K_0 and K_1 count as cliques; K_3 reports as a clique.
    """
    core = one_reduce(g)
    if is_complete(core):
        return ReducedClass.CLIQUE
    if is_cycle(core) and core.n % 2 == 1:
        return ReducedClass.ODD_CYCLE
    return ReducedClass.OTHER


# Colouring


def greedy_color(g: Graph, order: Sequence[int] | None = None) -> Coloring:
    """First-fit colouring in ``order`` (default: natural order)."""
    if order is None:
        order = range(g.n)
    elif sorted(order) != list(range(g.n)):
        raise GraphError("order must be a permutation of the vertices")
    color = [-1] * g.n
    for v in order:
        used = {color[w] for w in g.adj[v]}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return tuple(color)


def num_colors(coloring: Coloring) -> int:
    return len(set(coloring))


def is_proper_coloring(g: Graph, coloring: Coloring) -> bool:
    return len(coloring) == g.n and all(coloring[u] != coloring[v] for u, v in g.edges())


def isomorphic(g: Graph, h: Graph) -> bool:
    """Brute-force isomorphism test; intended for test assertions with n <= 8."""
    if g.n != h.n or g.m != h.m or degree_sequence(g) != degree_sequence(h):
        return False
    if g.n > 8:
        raise GraphError("brute-force isomorphism is limited to n <= 8")
    target = set(h.edges())
    g_edges = g.edges()
    for perm in permutations(range(g.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in target for u, v in g_edges):
            return True
    return False
