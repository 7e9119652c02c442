import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given

from hadwiger.exact import MinorWitness
from hadwiger.families import build_d_r_n
from hadwiger.generate import (
    CONNECTED_LABELED_COUNTS,
    GenerationError,
    enumerate_connected,
    random_connected_graph,
)
from hadwiger.graph import Graph, GraphError, complete_graph, cycle_graph, is_connected
from hadwiger.io import ParseError, parse_graph, parse_partition, serialize_graph, serialize_partition

from conftest import graphs


def test_parse_triangle():
    assert parse_graph("3 3\n0 1\n1 2\n2 0\n") == cycle_graph(3)


def test_parse_comments_and_blank_lines():
    assert parse_graph("# triangle\n3 3\n\n0 1\n# mid\n1 2\n2 0\n") == cycle_graph(3)


@pytest.mark.parametrize(
    "text, line",
    [
        ("2 1\n0 0\n", 2),
        ("3 2\n0 1\n1 0\n", 3),
        ("3 1\n0 5\n", 2),
        ("3\n", 1),
        ("x y\n", 1),
        ("3 2\n0 1\n", 2),
        ("3 1\n0 1 2\n", 2),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line


def test_parse_self_loop_message():
    with pytest.raises(ParseError, match="self-loop"):
        parse_graph("2 1\n0 0\n")


def test_parse_empty():
    with pytest.raises(ParseError):
        parse_graph("# nothing\n")


def test_serialize_d39():
    text = serialize_graph(build_d_r_n(3, 9))
    lines = text.splitlines()
    assert lines[0] == "9 9"
    assert lines[1:] == ["0 3", "1 3", "1 4", "2 5", "2 6", "3 6", "4 7", "5 7", "5 8"]
    assert text.endswith("\n") and "\r" not in text


@given(graphs(min_n=0, max_n=12))
def test_round_trip_property(g):
    assert parse_graph(serialize_graph(g)) == g


def test_round_trip_seeded_random():
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.randint(1, 12)
        g = random_connected_graph(n, rng.choice([0.3, 0.5, 0.8]), rng.getrandbits(64))
        assert parse_graph(serialize_graph(g)) == g


def test_partition_round_trip():
    w = MinorWitness.of([[2, 5, 8], [0, 3, 6], [1, 4, 7]])
    text = serialize_partition(w)
    assert text == "0 3 6\n1 4 7\n2 5 8\n"
    assert parse_partition(text).sorted_classes() == w.sorted_classes()


# generation


def test_random_connected_examples():
    assert random_connected_graph(1, 0.3, 99) == Graph.from_edges(1, [])
    assert random_connected_graph(5, 1.0, 123) == complete_graph(5)
    assert random_connected_graph(8, 0.4, 42) == random_connected_graph(8, 0.4, 42)


def test_random_connected_gives_up():
    with pytest.raises(GenerationError, match="larger p"):
        random_connected_graph(30, 0.01, 0)


def test_random_connected_bad_p():
    with pytest.raises(GraphError):
        random_connected_graph(5, 0.0, 0)


def _brute_connected_count(n: int) -> int:
    pairs = list(combinations(range(n), 2))
    count = 0
    for subset in range(1 << len(pairs)):
        G = nx.empty_graph(n)
        G.add_edges_from(p for i, p in enumerate(pairs) if subset >> i & 1)
        count += nx.is_connected(G)
    return count


@pytest.mark.parametrize("n, expected", [(2, 1), (3, 4), (4, 38)])
def test_enumerate_counts_small(n, expected):
    assert sum(1 for _ in enumerate_connected(n)) == expected == _brute_connected_count(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_enumerate_counts_known(n):
    graphs_n = list(enumerate_connected(n))
    assert len(graphs_n) == CONNECTED_LABELED_COUNTS[n]
    assert len(set(graphs_n)) == len(graphs_n)
    assert all(is_connected(g) for g in graphs_n)


def test_enumerate_is_deterministic():
    assert list(enumerate_connected(4)) == list(enumerate_connected(4))


def test_enumerate_limit():
    with pytest.raises(GraphError):
        next(enumerate_connected(8))
