"""Plain-text graph and partition files.

Graph files: a header line ``n m`` then ``m`` lines ``u v`` (0-based ids).
Lines starting with ``#`` and blank lines are ignored.  Partition files hold
one class per line as space-separated vertex ids.
"""

from __future__ import annotations

from .exact import MinorWitness
from .graph import Graph


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line.split()


def _ints(fields: list[str], lineno: int) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(fields)!r}", lineno) from None


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    try:
        lineno, fields = next(lines)
    except StopIteration:
        raise ParseError("missing 'n m' header") from None
    header = _ints(fields, lineno)
    if len(header) != 2 or header[0] < 0 or header[1] < 0:
        raise ParseError("header must be two non-negative integers 'n m'", lineno)
    n, m = header
    seen: set[tuple[int, int]] = set()
    last = lineno
    for lineno, fields in lines:
        last = lineno
        pair = _ints(fields, lineno)
        if len(pair) != 2:
            raise ParseError("edge line must have exactly two vertex ids", lineno)
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range [0, {n})", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", lineno)
        seen.add(key)
    if len(seen) != m:
        raise ParseError(f"header declares {m} edges, found {len(seen)}", last)
    return Graph.from_edges(n, seen)


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_partition(text: str) -> MinorWitness:
    classes = []
    for lineno, fields in _content_lines(text):
        ids = _ints(fields, lineno)
        if len(set(ids)) != len(ids):
            raise ParseError("repeated vertex within a class", lineno)
        classes.append(ids)
    return MinorWitness.of(classes)


def serialize_partition(w: MinorWitness) -> str:
    return "".join(" ".join(map(str, c)) + "\n" for c in w.sorted_classes())
