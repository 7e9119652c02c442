"""Graph sources: seeded random connected graphs and exhaustive enumeration."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .graph import Graph, GraphError, is_connected, mask_closure

ENUMERATE_MAX_N = 7
MAX_REJECTIONS = 1000

# connected labelled graphs on n vertices (OEIS A001187)
CONNECTED_LABELED_COUNTS = (1, 1, 1, 4, 38, 728, 26704, 1866256)


class GenerationError(RuntimeError):
    pass


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) conditioned on connectivity by rejection; deterministic in (n, p, seed)."""
    if n < 1:
        raise GraphError("n must be at least 1")
    if not 0 < p <= 1:
        raise GraphError("edge probability must be in (0, 1]")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    for _ in range(MAX_REJECTIONS):
        g = Graph.from_edges(n, [e for e in pairs if rng.random() < p])
        if is_connected(g):
            return g
    raise GenerationError(
        f"{MAX_REJECTIONS} consecutive disconnected samples at n={n}, p={p}; try a larger p"
    )


def connected_masks(n: int) -> Iterator[tuple[int, ...]]:
    """Neighbour bitmasks of every connected labelled graph on ``n`` vertices.

    Edge subsets are visited in increasing binary order over the
    lexicographically ordered vertex pairs.
    """
    if n > ENUMERATE_MAX_N:
        raise GraphError(f"exhaustive enumeration is limited to n <= {ENUMERATE_MAX_N}")
    if n == 0:
        yield ()
        return
    pairs = list(combinations(range(n), 2))
    full = (1 << n) - 1
    edge_bits = [(1 << u, 1 << v, u, v) for u, v in pairs]
    for subset in range(1 << len(pairs)):
        masks = [0] * n
        s = subset
        while s:
            low = s & -s
            bu, bv, u, v = edge_bits[low.bit_length() - 1]
            masks[u] |= bv
            masks[v] |= bu
            s ^= low
        if mask_closure(masks, 1, full) == full:
            yield tuple(masks)


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Every labelled connected simple graph on ``n`` vertices, exactly once."""
    for masks in connected_masks(n):
        yield Graph.from_masks(masks)
