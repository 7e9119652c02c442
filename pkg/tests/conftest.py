"""Shared fixtures and brute-force oracles.

The oracles here deliberately avoid the package's search code: they enumerate
every set partition / colour assignment directly.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, product

import networkx as nx
import pytest
from hypothesis import strategies as st

from hadwiger.generate import enumerate_connected, random_connected_graph
from hadwiger.graph import Graph

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest):
        yield [[first]] + p
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]


@lru_cache(maxsize=None)
def _partitions_as_masks(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(sum(1 << v for v in c) for c in p) for p in set_partitions(range(n)))


def brute_hadwiger(g: Graph) -> int:
    """Max class count over all set partitions with connected, pairwise adjacent classes."""
    n = g.n
    adj = [set(s) for s in g.adj]
    conn = {}
    nbr = {}
    for mask in range(1, 1 << n):
        members = [v for v in range(n) if mask >> v & 1]
        seen, stack = {members[0]}, [members[0]]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if mask >> w & 1 and w not in seen:
                    seen.add(w)
                    stack.append(w)
        conn[mask] = len(seen) == len(members)
        nbr[mask] = 0
        for v in members:
            for w in adj[v]:
                nbr[mask] |= 1 << w
    best = 0
    for part in _partitions_as_masks(n):
        if len(part) <= best:
            continue
        if all(conn[c] for c in part) and all(nbr[a] & b for a, b in combinations(part, 2)):
            best = len(part)
    return best


def brute_chromatic(g: Graph) -> int:
    edges = g.edges()
    for k in range(1, g.n + 1):
        for colors in product(range(k), repeat=g.n):
            if all(colors[u] != colors[v] for u, v in edges):
                return k
    return g.n


def brute_acyclic_clique(g: Graph, r: int, *, literal: bool = False) -> bool:
    """Partition into r classes (trees, or merely connected when literal) with one edge per pair."""
    G = to_nx(g)
    for part in set_partitions(range(g.n)):
        if len(part) != r:
            continue
        if literal:
            if not all(nx.is_connected(G.subgraph(c)) for c in part):
                continue
        elif not all(nx.is_tree(G.subgraph(c)) for c in part):
            continue
        if all(
            sum(1 for u in a for v in b if G.has_edge(u, v)) == 1 for a, b in combinations(part, 2)
        ):
            return True
    return False


def brute_acyclic_cycle(g: Graph, length: int) -> bool:
    G = to_nx(g)
    for part in set_partitions(range(g.n)):
        if len(part) != length or not all(nx.is_tree(G.subgraph(c)) for c in part):
            continue
        Q = nx.MultiGraph()
        Q.add_nodes_from(range(length))
        for i, j in combinations(range(length), 2):
            for u in part[i]:
                for v in part[j]:
                    if G.has_edge(u, v):
                        Q.add_edge(i, j)
        if Q.number_of_edges() == length and all(d == 2 for _, d in Q.degree()) and nx.is_connected(Q):
            if not any(Q.number_of_edges(i, j) > 1 for i, j in combinations(range(length), 2)):
                return True
    return False


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    if connected:
        # chain components together to guarantee connectivity
        extra = [(i, i + 1) for i in range(n - 1) if draw(st.booleans())]
        g = Graph.from_edges(n, chosen + extra)
        comps = list(nx.connected_components(to_nx(g)))
        links = [(min(a), min(b)) for a, b in zip(comps, comps[1:])]
        return Graph.from_edges(n, chosen + extra + links)
    return Graph.from_edges(n, chosen)


@pytest.fixture(scope="session")
def connected_upto6() -> list[Graph]:
    return [g for n in range(1, 7) for g in enumerate_connected(n)]


RANDOM_POPULATION_SEED = 20260101


@pytest.fixture(scope="session")
def random_population() -> list[Graph]:
    """1000 seeded random connected graphs, 500 each at n = 7 and n = 8."""
    rng = random.Random(RANDOM_POPULATION_SEED)
    out = []
    for n in (7, 8):
        for i in range(500):
            p = (0.35, 0.5, 0.7)[i % 3]
            out.append(random_connected_graph(n, p, rng.getrandbits(64)))
    return out
