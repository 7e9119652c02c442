"""Exact solvers for desk-scale graphs.

Chromatic number by DSATUR-ordered backtracking, Hadwiger number by a
branch-and-bound search over vertex partitions, and the acyclic-contraction
predicates.  Everything works on neighbour bitmasks and processes vertices and
classes in a fixed order, so results (including returned witnesses) are
deterministic.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .bounds import ek_bound
from .graph import Coloring, Graph, GraphError, is_connected, mask_connected

CHROMATIC_MAX_N = 32
HADWIGER_MAX_N = 12


class SolverLimitError(RuntimeError):
    """A size or time limit was hit.

    ``best`` is a certified lower bound and ``witness`` certifies it, when one
    was found before giving up.
    """

    def __init__(self, message: str, best: int | None = None, witness: MinorWitness | None = None):
        super().__init__(message)
        self.best = best
        self.witness = witness


@dataclass(frozen=True)
class MinorWitness:
    """A partition of V(G); one class per vertex of the target clique."""

    classes: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, classes: Iterable[Iterable[int]]) -> MinorWitness:
        return cls(tuple(frozenset(c) for c in classes))

    def __len__(self) -> int:
        return len(self.classes)

    def sorted_classes(self) -> list[list[int]]:
        return sorted(sorted(c) for c in self.classes)


def _bits(vs: Iterable[int]) -> int:
    out = 0
    for v in vs:
        out |= 1 << v
    return out


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_partition(g: Graph, w: MinorWitness) -> None:
    seen: set[int] = set()
    for c in w.classes:
        if not c:
            raise GraphError("witness has an empty class")
        if not c.isdisjoint(seen):
            raise GraphError("witness classes overlap")
        seen |= c
    if seen != set(range(g.n)):
        raise GraphError("witness classes do not cover exactly the vertex set")


def verify_minor_witness(g: Graph, w: MinorWitness) -> bool:
    """True iff every class is connected and every pair of classes touches.

    A true result certifies ``h(g) >= len(w)``.
    """
    _check_partition(g, w)
    masks = g.masks
    class_masks = [_bits(c) for c in w.classes]
    nbrs = []
    for cm in class_masks:
        if not mask_connected(masks, cm):
            return False
        nb = 0
        for v in _iter_bits(cm):
            nb |= masks[v]
        nbrs.append(nb)
    k = len(class_masks)
    return all(nbrs[a] & class_masks[b] for a in range(k) for b in range(a + 1, k))


# Chromatic number


def clique_number(g: Graph) -> int:
    masks = g.masks
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = cand.bit_length() - 1
            cand ^= 1 << v
            expand(size + 1, cand & masks[v])

    expand(0, (1 << g.n) - 1)
    return best


def find_coloring(g: Graph, k: int) -> Coloring | None:
    """A proper colouring with at most ``k`` colours, or None."""
    n, masks = g.n, g.masks
    color = [-1] * n
    degree = [m.bit_count() for m in masks]

    def forbidden(v: int) -> int:
        f = 0
        for w in _iter_bits(masks[v]):
            if color[w] >= 0:
                f |= 1 << color[w]
        return f

    def rec(done: int, used: int) -> bool:
        if done == n:
            return True
        v, fv, key = -1, 0, None
        for u in range(n):
            if color[u] < 0:
                fu = forbidden(u)
                cand = (fu.bit_count(), degree[u], -u)
                if key is None or cand > key:
                    v, fv, key = u, fu, cand
        for c in range(min(used + 1, k)):
            if not fv >> c & 1:
                color[v] = c
                if rec(done + 1, max(used, c + 1)):
                    return True
                color[v] = -1
        return False

    return tuple(color) if rec(0, 0) else None


def chromatic_number(g: Graph, *, max_n: int = CHROMATIC_MAX_N) -> int:
    if g.n < 1:
        raise GraphError("chromatic number needs at least one vertex")
    if g.n > max_n:
        raise SolverLimitError(f"n={g.n} exceeds chromatic limit {max_n}", best=clique_number(g))
    k = max(1, clique_number(g))
    while find_coloring(g, k) is None:
        k += 1
    return k


# Hadwiger number


def _bfs_order(g: Graph) -> list[int]:
    seen = [False] * g.n
    order = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(g.adj[u]):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def greedy_minor_witness(g: Graph) -> MinorWitness:
    """Contract greedily until the quotient is complete; cheap certified lower bound.

    Repeatedly takes the lowest-index class of minimum quotient degree that
    is not yet adjacent to every class and merges it into the neighbouring
    class sharing the fewest neighbours with it.
    """
    if not is_connected(g) or g.n == 0:
        raise GraphError("greedy witness needs a nonempty connected graph")
    masks = g.masks
    classes = [1 << v for v in range(g.n)]
    nbrs = list(masks)

    while True:
        k = len(classes)
        qadj = [{b for b in range(k) if b != a and nbrs[a] & classes[b]} for a in range(k)]
        todo = [a for a in range(k) if len(qadj[a]) < k - 1]
        if not todo:
            break
        a = min(todo, key=lambda x: (len(qadj[x]), x))
        b = min(qadj[a], key=lambda x: (len(qadj[a] & qadj[x]), x))
        lo, hi = min(a, b), max(a, b)
        classes[lo] |= classes[hi]
        nbrs[lo] |= nbrs[hi]
        del classes[hi], nbrs[hi]
    return MinorWitness.of(list(_iter_bits(c)) for c in classes)


class _Found(Exception):
    pass


def hadwiger_witness(
    g: Graph, *, max_n: int = HADWIGER_MAX_N, time_budget: float | None = None
) -> MinorWitness:
    """A minor witness with the maximum number of classes.

    Depth-first assignment of vertices (in BFS order) to classes.  A class
    none of whose neighbours remain unassigned is final, so it must already be
    connected and touch every other class, and no further class can be opened.
    The search stops as soon as it meets ``min(n, ek_bound)``.
    """
    if g.n < 1 or not is_connected(g):
        raise GraphError("Hadwiger number is defined here for nonempty connected graphs")
    start = greedy_minor_witness(g)
    if g.n > max_n:
        raise SolverLimitError(f"n={g.n} exceeds Hadwiger limit {max_n}", best=len(start), witness=start)

    n, masks = g.n, g.masks
    order = _bfs_order(g)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | 1 << order[i]

    upper = min(n, ek_bound(n, g.m))
    best = len(start)
    best_classes = [_bits(c) for c in start.classes]
    if best >= upper:
        return start

    classes: list[int] = []
    nbrs: list[int] = []
    deadline = None if time_budget is None else time.monotonic() + time_budget
    nodes = 0

    def feasible(rest: int) -> bool:
        k = len(classes)
        any_closed = False
        for a in range(k):
            if nbrs[a] & rest:
                continue
            any_closed = True
            if not mask_connected(masks, classes[a]):
                return False
            na = nbrs[a]
            for b in range(k):
                if b != a and not na & classes[b]:
                    return False
        return not (any_closed and k <= best)

    def dfs(i: int) -> None:
        nonlocal best, best_classes, nodes
        k = len(classes)
        if i == n:
            if k > best:
                best, best_classes = k, list(classes)
                if best >= upper:
                    raise _Found
            return
        if k + (n - i) <= best:
            return
        nodes += 1
        if deadline is not None and nodes & 1023 == 0 and time.monotonic() > deadline:
            raise SolverLimitError(
                "Hadwiger search ran out of time",
                best=best,
                witness=MinorWitness.of(list(_iter_bits(c)) for c in best_classes),
            )
        v = order[i]
        bit, rest = 1 << v, suffix[i + 1]

        classes.append(bit)
        nbrs.append(masks[v])
        if feasible(rest):
            dfs(i + 1)
        classes.pop()
        nbrs.pop()

        for a in range(k):
            if not nbrs[a] & suffix[i]:
                continue
            old_c, old_n = classes[a], nbrs[a]
            classes[a] = old_c | bit
            nbrs[a] = old_n | masks[v]
            if feasible(rest):
                dfs(i + 1)
            classes[a], nbrs[a] = old_c, old_n

    try:
        dfs(0)
    except _Found:
        pass
    return MinorWitness.of(list(_iter_bits(c)) for c in best_classes)


def hadwiger_number(g: Graph, *, max_n: int = HADWIGER_MAX_N, time_budget: float | None = None) -> int:
    """Largest r such that K_r is obtainable from ``g`` by contractions alone."""
    return len(hadwiger_witness(g, max_n=max_n, time_budget=time_budget))


# Acyclic contractions


def _structured_partition_exists(g: Graph, k: int, *, trees: bool, quotient: str) -> bool:
    """Search partitions into exactly ``k`` connected classes, any two joined by <= 1 edge.

    ``quotient`` is ``"complete"`` (every pair of classes joined) or
    ``"cycle"`` (the quotient is the cycle C_k).  With ``trees`` every class
    must induce a tree.  Inner and crossing edge counts are kept incrementally.
    """
    n, masks = g.n, g.masks
    order = _bfs_order(g)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | 1 << order[i]
    classes: list[int] = []
    nbrs: list[int] = []
    sizes: list[int] = []
    inner: list[int] = []
    cross = [[0] * k for _ in range(k)]

    def add(a: int, v: int) -> bool:
        """Put ``v`` into class ``a``; False when a count limit is already broken."""
        mv = masks[v]
        ok = True
        for b in range(len(classes)):
            c = (mv & classes[b]).bit_count()
            if b == a:
                inner[a] += c
            elif c:
                cross[a][b] += c
                cross[b][a] += c
                if cross[a][b] >= 2:
                    ok = False
        classes[a] |= 1 << v
        nbrs[a] |= mv
        sizes[a] += 1
        return ok and not (trees and inner[a] >= sizes[a])

    def remove(a: int, v: int, old_class: int, old_nbrs: int) -> None:
        classes[a], nbrs[a] = old_class, old_nbrs
        sizes[a] -= 1
        mv = masks[v]
        for b in range(len(classes)):
            c = (mv & classes[b]).bit_count()
            if b == a:
                inner[a] -= c
            elif c:
                cross[a][b] -= c
                cross[b][a] -= c

    def closed_ok(rest: int) -> bool:
        kk = len(classes)
        any_closed = False
        for a in range(kk):
            row = cross[a]
            qdeg = sum(1 for b in range(kk) if row[b])
            if quotient == "cycle" and qdeg > 2:
                return False
            if not nbrs[a] & rest:
                any_closed = True
                if not mask_connected(masks, classes[a]):
                    return False
                if qdeg != (k - 1 if quotient == "complete" else 2):
                    return False
        # a new class could never touch a closed one
        return not (quotient == "complete" and any_closed and kk < k)

    def quotient_connected() -> bool:
        reached, frontier = {0}, [0]
        while frontier:
            a = frontier.pop()
            for b in range(k):
                if b not in reached and cross[a][b]:
                    reached.add(b)
                    frontier.append(b)
        return len(reached) == k

    def dfs(i: int) -> bool:
        kk = len(classes)
        if i == n:
            return kk == k and (quotient == "complete" or quotient_connected())
        if kk + (n - i) < k:
            return False
        v = order[i]
        rest = suffix[i + 1]
        if kk < k:
            classes.append(0)
            nbrs.append(0)
            sizes.append(0)
            inner.append(0)
            if add(kk, v) and closed_ok(rest) and dfs(i + 1):
                return True
            remove(kk, v, 0, 0)
            classes.pop()
            nbrs.pop()
            sizes.pop()
            inner.pop()
        for a in range(kk):
            if not nbrs[a] & suffix[i]:
                continue
            old_c, old_n = classes[a], nbrs[a]
            if add(a, v) and closed_ok(rest) and dfs(i + 1):
                return True
            remove(a, v, old_c, old_n)
        return False

    return dfs(0)


def _check_small_connected(g: Graph, max_n: int) -> None:
    if not is_connected(g):
        raise GraphError("graph must be connected")
    if g.n > max_n:
        raise SolverLimitError(f"n={g.n} exceeds acyclic-contraction limit {max_n}")


def has_acyclic_contraction_to_clique(
    g: Graph, r: int, *, literal: bool = False, max_n: int = HADWIGER_MAX_N
) -> bool:
    """Is there a partition into ``r`` classes joined pairwise by exactly one edge?

    By default each class must also induce a tree.  With ``literal=True``
    classes need only be connected: that is exactly the condition that no
    cycle of ``g`` lands on two classes, since two connected classes span a
    cycle through both iff at least two edges join them.

    The identity partition counts, so K_r itself qualifies.
    """
    if r < 3:
        raise GraphError("target clique size must be at least 3")
    _check_small_connected(g, max_n)
    if r > g.n:
        return False
    # tree classes contribute n - r edges, the quotient r(r-1)/2
    needed = g.n - r + r * (r - 1) // 2
    if g.m < needed or (not literal and g.m != needed):
        return False
    return _structured_partition_exists(g, r, trees=not literal, quotient="complete")


def has_acyclic_contraction_to_any_clique(
    g: Graph, *, literal: bool = False, max_n: int = HADWIGER_MAX_N
) -> bool:
    _check_small_connected(g, max_n)
    return any(
        has_acyclic_contraction_to_clique(g, r, literal=literal, max_n=max_n)
        for r in range(3, g.n + 1)
    )


def has_acyclic_contraction_to_cycle(g: Graph, length: int, *, max_n: int = HADWIGER_MAX_N) -> bool:
    """Partition into ``length`` tree classes whose quotient is C_length with single edges."""
    if length < 3:
        raise GraphError("cycle length must be at least 3")
    _check_small_connected(g, max_n)
    # n - length tree edges plus length cycle edges
    if length > g.n or g.m != g.n:
        return False
    return _structured_partition_exists(g, length, trees=True, quotient="cycle")
