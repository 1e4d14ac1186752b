import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eccmat import graph as gr
from eccmat.graph import Graph, GraphError, make_graph
from oracles import permutation_isomorphic


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, tuple(chosen))


def iso(g, h):
    return permutation_isomorphic(g.n, g.edges, h.n, h.edges)


def test_make_graph_examples():
    assert make_graph(2, [(0, 1)]) == gr.complete(2)
    assert make_graph(3, [(0, 1), (0, 2)]) == gr.star(3)
    assert make_graph(4, [(0, 1), (1, 2), (2, 3)]) == gr.path(4)


def test_make_graph_normalizes_and_dedups():
    g = make_graph(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_make_graph_rejects(edges):
    with pytest.raises(GraphError):
        make_graph(3, edges)


def test_family_examples():
    assert gr.family("star", 4).degrees() == [3, 1, 1, 1]
    assert iso(gr.family("cocktail_party", 2), gr.cycle(4))
    lol = gr.family("lollipop", 3, 2)
    assert (lol.n, lol.m) == (5, 5)
    assert lol.has_edge(2, 3) and lol.has_edge(3, 4)


def test_family_labelings():
    assert gr.lollipop(4, 3).edges[-3:] == ((3, 4), (4, 5), (5, 6))
    cp = gr.cocktail_party(3)
    assert [(i, i + 3) for i in range(3) if not cp.has_edge(i, i + 3)] == [(0, 3), (1, 4), (2, 5)]
    assert gr.star(6).degrees()[0] == 5
    assert gr.barbell(3).has_edge(0, 3)


@pytest.mark.parametrize(
    "name,params",
    [("cycle", (2,)), ("wheel", (3,)), ("barbell", (1,)), ("cocktail_party", (1,)), ("lollipop", (2, 1)), ("lollipop", (3, 0))],
)
def test_family_minimums(name, params):
    with pytest.raises(GraphError):
        gr.family(name, *params)


def test_unknown_family():
    with pytest.raises(GraphError):
        gr.family("petersen")


def test_complement_examples():
    assert gr.complement(gr.complete(5)) == gr.empty(5)
    assert gr.complement(gr.cycle(4)) == Graph(4, ((0, 2), (1, 3)))


@given(graphs())
def test_complement_involution(g):
    assert gr.complement(gr.complement(g)) == g


def test_join_examples():
    for n in (4, 5, 6):
        assert gr.join(gr.empty(1), gr.cycle(n)) == gr.wheel(n + 1)
        assert gr.join(gr.empty(1), gr.empty(n - 1)) == gr.star(n)
    j = gr.join(gr.path(3), gr.path(3))
    assert (j.n, j.m) == (6, 13)


@given(graphs(6), graphs(6))
def test_join_edge_count(g1, g2):
    j = gr.join(g1, g2)
    assert j.m == g1.m + g2.m + g1.n * g2.n
    assert all(j.has_edge(*e) for e in g1.edges)


def test_corona_examples():
    assert iso(gr.corona(gr.complete(2), Graph(1)), gr.path(4))
    net = gr.corona(gr.complete(3), Graph(1))
    assert (net.n, net.m) == (6, 6)
    c = gr.corona(gr.complete(2), gr.complete(2))
    assert (c.n, c.m) == (6, 7)


@given(st.integers(1, 5), graphs(4))
def test_corona_structure(n, h):
    c = gr.corona(gr.complete(n), h)
    m = h.n
    assert c.n == n * (1 + m)
    assert c.m == n * (n - 1) // 2 + n * h.m + n * m
    assert all(c.has_edge(i, j) for i, j in itertools.combinations(range(n), 2))
    for i in range(n):
        copy = [i + n * (k + 1) for k in range(m)]
        assert all(c.has_edge(i, v) for v in copy)


def test_tree_enumeration_small():
    trees3 = list(gr.enumerate_labeled_trees(3))
    assert len(trees3) == 3 and all(iso(t, gr.path(3)) for t in trees3)
    trees4 = list(gr.enumerate_labeled_trees(4))
    paths = sum(iso(t, gr.path(4)) for t in trees4)
    stars = sum(iso(t, gr.star(4)) for t in trees4)
    assert (len(trees4), paths, stars) == (16, 12, 4)
    assert list(gr.enumerate_labeled_trees(2)) == [gr.complete(2)]


@pytest.mark.parametrize("n", range(2, 9))
def test_tree_enumeration_counts(n):
    count = 0
    seen = set()
    for t in gr.enumerate_labeled_trees(n):
        count += 1
        if n <= 6:
            assert t.m == n - 1 and t.is_connected()
            seen.add(t.edges)
    assert count == n ** (n - 2)
    if n <= 6:
        assert len(seen) == count


def test_tree_prefix_partition():
    n = 5
    whole = [t.edges for t in gr.enumerate_labeled_trees(n)]
    parts = [t.edges for p in range(n) for t in gr.enumerate_labeled_trees(n, (p,))]
    assert parts == whole


def test_star_equals_join_of_empties():
    for n in range(2, 9):
        assert gr.star(n) == gr.join(gr.empty(1), gr.empty(n - 1))


@settings(max_examples=60)
@given(graphs(6))
def test_backtracking_iso_matches_permutation_oracle(g):
    h = gr.path(g.n) if g.n > 1 else Graph(1)
    perm = list(reversed(range(g.n)))
    assert gr.are_isomorphic(g, g.relabel(perm))
    assert gr.are_isomorphic(g, h) == iso(g, h)
