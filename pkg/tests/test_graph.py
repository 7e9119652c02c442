from functools import lru_cache

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hadwiger.exact import hadwiger_number
from hadwiger.families import build_d_r_n, build_figure_1a
from hadwiger.graph import (
    Graph,
    GraphError,
    ReducedClass,
    classify_reduced,
    complete_graph,
    contract_edge,
    cycle_graph,
    degree_sequence,
    empty_graph,
    greedy_color,
    induced_subgraph,
    is_connected,
    is_proper_coloring,
    isomorphic,
    num_colors,
    one_reduce,
    path_graph,
    remove_vertices,
    star_graph,
)

from conftest import graphs, to_nx


def test_rejects_self_loop_and_asymmetry():
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(2, (frozenset({1}), frozenset()))
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])


def test_value_semantics():
    assert Graph.from_edges(3, [(0, 1), (1, 0), (1, 2)]) == path_graph(3)
    assert hash(path_graph(3)) == hash(Graph.from_edges(3, [(2, 1), (0, 1)]))


# contract_edge


def test_contract_square_to_triangle():
    assert contract_edge(cycle_graph(4), 0, 1) == cycle_graph(3)


def test_contract_triangle_collapses_parallel_edges():
    for u, v in complete_graph(3).edges():
        assert contract_edge(complete_graph(3), u, v) == complete_graph(2)


def test_contract_figure_1a_trees_gives_k4():
    g = build_figure_1a()
    # AB, CD, EF, GH; after each contraction the next tree edge is (k, k+1)
    for k in range(4):
        g = contract_edge(g, k, k + 1)
    assert g == complete_graph(4)


def test_contract_renumbering_rule():
    g = Graph.from_edges(5, [(1, 3), (3, 4), (0, 1), (2, 4)])
    c = contract_edge(g, 3, 1)
    # merged vertex is 1; 4 -> 3; 0 and 2 unchanged
    assert c == Graph.from_edges(4, [(0, 1), (1, 3), (2, 3)])


def test_contract_non_edge_raises():
    with pytest.raises(GraphError):
        contract_edge(path_graph(3), 0, 2)
    with pytest.raises(GraphError):
        contract_edge(path_graph(3), 0, 7)


@given(graphs(min_n=2, max_n=9), st.data())
def test_contract_counts(g, data):
    if g.m == 0:
        return
    u, v = data.draw(st.sampled_from(g.edges()))
    c = contract_edge(g, u, v)
    assert c.n == g.n - 1
    assert c.m <= g.m - 1


def test_contract_does_not_mutate():
    g = cycle_graph(5)
    before = g.edges()
    contract_edge(g, 0, 1)
    assert g.edges() == before


# connectivity and degrees


@pytest.mark.parametrize(
    "g, expected",
    [
        (path_graph(4), True),
        (Graph.from_edges(4, [(0, 1), (2, 3)]), False),
        (build_d_r_n(3, 9), True),
        (empty_graph(0), True),
        (empty_graph(1), True),
    ],
)
def test_is_connected(g, expected):
    assert is_connected(g) is expected


@given(graphs(max_n=10))
def test_is_connected_matches_networkx(g):
    assert is_connected(g) == nx.is_connected(to_nx(g))


@pytest.mark.parametrize(
    "g, expected",
    [
        (complete_graph(4), (3, 3, 3, 3)),
        (star_graph(5), (4, 1, 1, 1, 1)),
        # hand count from the construction's edge list
        (build_d_r_n(3, 9), (3, 3, 2, 2, 2, 2, 2, 1, 1)),
    ],
)
def test_degree_sequence(g, expected):
    assert degree_sequence(g) == expected


@given(graphs(max_n=10))
def test_degree_sequence_invariants(g):
    d = degree_sequence(g)
    assert list(d) == sorted(d, reverse=True)
    assert len(d) == g.n and sum(d) == 2 * g.m


# one_reduce / classify_reduced


def test_one_reduce_examples():
    assert one_reduce(path_graph(4)) == empty_graph(0)
    c5_pendant = Graph.from_edges(6, cycle_graph(5).edges() + [(2, 5)])
    assert one_reduce(c5_pendant) == cycle_graph(5)
    assert one_reduce(build_figure_1a()) == build_figure_1a()


@given(graphs(max_n=10))
def test_one_reduce_is_two_core(g):
    core = nx.k_core(to_nx(g), 2)
    assert one_reduce(g) == induced_subgraph(g, core.nodes)


@given(graphs(max_n=10))
def test_one_reduce_idempotent(g):
    once = one_reduce(g)
    assert one_reduce(once) == once


@given(graphs(max_n=10), st.randoms(use_true_random=False))
def test_one_reduce_order_independent(g, rng):
    # peel in a random order by hand
    current, alive = g, list(range(g.n))
    while True:
        low = [i for i in range(current.n) if current.degree(i) <= 1]
        if not low:
            break
        victim = rng.choice(low)
        current = remove_vertices(current, [victim])
        del alive[victim]
    assert current == one_reduce(g)
    assert current == induced_subgraph(g, alive)


def test_classify_reduced_examples():
    tree = Graph.from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])
    assert classify_reduced(tree) is ReducedClass.CLIQUE
    c7_tails = Graph.from_edges(10, cycle_graph(7).edges() + [(0, 7), (7, 8), (3, 9)])
    assert classify_reduced(c7_tails) is ReducedClass.ODD_CYCLE
    assert classify_reduced(build_figure_1a()) is ReducedClass.OTHER
    assert classify_reduced(complete_graph(3)) is ReducedClass.CLIQUE
    assert classify_reduced(cycle_graph(6)) is ReducedClass.OTHER
    assert classify_reduced(empty_graph(1)) is ReducedClass.CLIQUE


# greedy colouring


def test_greedy_color_examples():
    assert num_colors(greedy_color(complete_graph(4), [2, 0, 3, 1])) == 4
    assert num_colors(greedy_color(path_graph(6))) <= 2
    assert num_colors(greedy_color(build_d_r_n(3, 9))) <= 3


def test_greedy_color_rejects_bad_order():
    with pytest.raises(GraphError):
        greedy_color(path_graph(3), [0, 1, 1])


@given(graphs(max_n=10), st.randoms(use_true_random=False))
def test_greedy_color_proper_and_bounded(g, rng):
    order = list(range(g.n))
    rng.shuffle(order)
    col = greedy_color(g, order)
    assert is_proper_coloring(g, col)
    assert num_colors(col) <= g.max_degree + 1 if g.n else True


# isomorphism helper


def test_isomorphic_helper():
    a = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    b = Graph.from_edges(4, [(2, 0), (0, 3), (3, 1)])
    assert isomorphic(a, b)
    assert not isomorphic(a, star_graph(4))


@given(graphs(max_n=7), st.permutations(range(7)))
def test_isomorphic_matches_networkx(g, perm):
    p = [x for x in perm if x < g.n]
    h = Graph.from_edges(g.n, [(p[u], p[v]) for u, v in g.edges()])
    assert isomorphic(g, h)
    other = star_graph(g.n) if g.n else g
    assert isomorphic(g, other) == nx.is_isomorphic(to_nx(g), to_nx(other))


# minor monotonicity (exhaustive, cached over the 2^C(n,2) labelled graphs)


@lru_cache(maxsize=None)
def _h(g):
    return hadwiger_number(g)


def test_contraction_never_raises_hadwiger(connected_upto6):
    for g in connected_upto6:
        hg = _h(g)
        for u, v in g.edges():
            assert _h(contract_edge(g, u, v)) <= hg
