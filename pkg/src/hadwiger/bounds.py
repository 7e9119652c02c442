"""Closed-form upper bounds on the chromatic and Hadwiger numbers.

Every radical is evaluated with :func:`math.isqrt`.  For an integer ``a`` and
``x >= 0``, ``floor((a + sqrt(x)) / 2) == floor((a + isqrt(x)) / 2)``: with
``s = isqrt(x)`` the real value lies in ``[(a+s)/2, (a+s+1)/2)``, an interval
that never straddles an integer.  The results are therefore exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .graph import DegreeSequence, Graph, ReducedClass, classify_reduced, degree_sequence, is_connected


class BoundNotApplicable(ValueError):
    """The bound's hypothesis is not met by the input."""


def ek_bound(n: int, m: int) -> int:
    """Ershov-Kozhukin style bound ``floor((3 + sqrt(9 + 8(m - n))) / 2)``.

    Valid for both chi and h on connected graphs.
    """
    if n < 1 or m < n - 1:
        raise BoundNotApplicable(f"(n={n}, m={m}) cannot be a connected graph")
    return (3 + isqrt(9 + 8 * (m - n))) // 2


def chs_sqrt_bound(m: int) -> int:
    """``floor(1/2 + sqrt(1/4 + 2m))``, the largest k with k(k-1)/2 <= m."""
    if m < 0:
        raise BoundNotApplicable("negative edge count")
    return (1 + isqrt(1 + 8 * m)) // 2


def improved_bound(n: int, m: int) -> int:
    """``floor((3 + sqrt(1 + 8(m - n))) / 2)``; defined only for m >= n."""
    if m < n:
        raise BoundNotApplicable(f"m={m} < n={n}: radicand would be negative")
    return (3 + isqrt(1 + 8 * (m - n))) // 2


def brooks_bound(g: Graph) -> int:
    if g.n == 0:
        raise BoundNotApplicable("empty graph")
    return g.max_degree + 1


def welsh_powell_bound(d: DegreeSequence) -> int:
    """``max_j min(j, d_j + 1)`` over 1-based positions of a non-increasing sequence."""
    if not d:
        raise BoundNotApplicable("empty degree sequence")
    if any(d[i] < d[i + 1] for i in range(len(d) - 1)):
        raise ValueError("degree sequence must be non-increasing")
    return max(min(j, dj + 1) for j, dj in enumerate(d, start=1))


def delta2(g: Graph) -> int:
    """Largest degree of a neighbour ``v`` of some ``u`` with ``d(v) <= d(u)``."""
    if g.m == 0:
        raise BoundNotApplicable("edgeless graph")
    deg = [len(s) for s in g.adj]
    best = 0
    for u in range(g.n):
        for v in g.adj[u]:
            if deg[v] <= deg[u] and deg[v] > best:
                best = deg[v]
    return best


def stacho_delta2_bound(g: Graph) -> int:
    return delta2(g) + 1


def stacho_s(g: Graph) -> int:
    """Size of the largest degree class among degrees ``i >= ceil((Delta+2)/2)``."""
    delta = g.max_degree
    if delta < 2:
        raise BoundNotApplicable("maximum degree below 2")
    threshold = -(-(delta + 2) // 2)
    counts = [0] * (delta + 1)
    for s in g.adj:
        counts[len(s)] += 1
    return max(counts[i] for i in range(threshold, delta + 1))


def stacho_s_bound(g: Graph) -> int:
    """``ceil(s / (s + 1) * (Delta + 2))``."""
    s = stacho_s(g)
    return -(-(s * (g.max_degree + 2)) // (s + 1))


@dataclass(frozen=True)
class BoundReport:
    """All bound values for one graph; ``None`` marks a bound that does not apply."""

    n: int
    m: int
    delta: int
    delta2: int | None
    s: int | None
    ek: int
    chs_sqrt: int
    improved: int | None
    brooks: int
    welsh_powell: int
    stacho_delta2: int | None
    stacho_s: int | None
    connected: bool
    reduced_class: ReducedClass
    has_acyclic_clique_contraction: bool | None = None

    def chi_bounds(self) -> dict[str, int]:
        """Applicable chromatic-number bounds by name."""
        out = {
            "brooks": self.brooks,
            "welsh_powell": self.welsh_powell,
            "stacho_delta2": self.stacho_delta2,
            "stacho_s": self.stacho_s,
            "chs_sqrt": self.chs_sqrt,
        }
        if self.reduced_class is ReducedClass.OTHER:
            out["improved"] = self.improved
        return {k: v for k, v in out.items() if v is not None}


def _maybe(fn, g):
    try:
        return fn(g)
    except BoundNotApplicable:
        return None


def evaluate_all(g: Graph, has_acyclic_clique_contraction: bool | None = None) -> BoundReport:
    if g.n < 1:
        raise BoundNotApplicable("empty graph")
    if not is_connected(g):
        raise BoundNotApplicable("bounds assume a connected graph")
    return BoundReport(
        n=g.n,
        m=g.m,
        delta=g.max_degree,
        delta2=_maybe(delta2, g),
        s=_maybe(stacho_s, g),
        ek=ek_bound(g.n, g.m),
        chs_sqrt=chs_sqrt_bound(g.m),
        improved=improved_bound(g.n, g.m) if g.m >= g.n else None,
        brooks=brooks_bound(g),
        welsh_powell=welsh_powell_bound(degree_sequence(g)),
        stacho_delta2=_maybe(stacho_delta2_bound, g),
        stacho_s=_maybe(stacho_s_bound, g),
        connected=True,
        reduced_class=classify_reduced(g),
        has_acyclic_clique_contraction=has_acyclic_clique_contraction,
    )
