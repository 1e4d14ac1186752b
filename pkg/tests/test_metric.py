import numpy as np
import pytest

from eccmat import graph as gr
from eccmat.batch import supports_connected, tree_ecc_matrices
from eccmat.graph import Graph
from eccmat.metric import (
    DisconnectedGraphError,
    apsp,
    eccentricities,
    eccentricity_matrix,
    is_irreducible,
    matrix_from_json,
    matrix_to_csv,
    matrix_to_json,
    support_graph,
)
from oracles import floyd_warshall


def random_connected(rng, n):
    # random spanning tree plus extra edges
    edges = [(int(rng.integers(0, v)), v) for v in range(1, n)]
    extra = int(rng.integers(0, n * 2))
    for _ in range(extra):
        i, j = rng.integers(0, n, size=2)
        if i != j:
            edges.append((int(i), int(j)))
    perm = rng.permutation(n)
    return Graph(n, tuple((perm[i], perm[j]) for i, j in edges))


def test_apsp_examples():
    d = apsp(gr.path(3))
    assert d[0, 2] == 2 and d[0, 1] == d[1, 2] == 1
    assert np.array_equal(apsp(gr.complete(4)), 1 - np.eye(4, dtype=int))


def test_apsp_matches_floyd_warshall():
    rng = np.random.default_rng(7)
    for _ in range(100):
        g = random_connected(rng, int(rng.integers(1, 31)))
        d = apsp(g)
        assert np.array_equal(d, floyd_warshall(g.n, g.edges))
        assert np.array_equal(d, d.T)
        # d[i, k] <= d[i, j] + d[j, k]
        assert np.all(d[:, None, :] <= d[:, :, None] + d[None, :, :])


def test_disconnected_rejected():
    with pytest.raises(DisconnectedGraphError, match="between 0 and 2"):
        apsp(Graph(3, ((0, 1),)))
    with pytest.raises(DisconnectedGraphError):
        eccentricity_matrix(gr.empty(2))


def test_eccentricity_matrix_star():
    assert eccentricity_matrix(gr.star(3)).tolist() == [[0, 1, 1], [1, 0, 2], [1, 2, 0]]


def test_eccentricity_matrix_path4():
    expected = [[0, 0, 2, 3], [0, 0, 0, 2], [2, 0, 0, 0], [3, 2, 0, 0]]
    assert eccentricity_matrix(gr.path(4)).tolist() == expected


@pytest.mark.parametrize("n", [5, 8, 11, 14])
def test_eccentricity_matrix_path_formula(n):
    # row 1 holds j-1 for j > floor(n/2); column n holds n-i for 2 <= i <= ceil(n/2) (1-based)
    e = np.zeros((n, n), dtype=int)
    h = n // 2
    for j in range(h + 1, n + 1):
        e[0, j - 1] = e[j - 1, 0] = j - 1
    for i in range(2, (n + 1) // 2 + 1):
        e[i - 1, n - 1] = e[n - 1, i - 1] = n - i
    assert np.array_equal(eccentricity_matrix(gr.path(n)), e)


def test_eccentricity_matrix_complete():
    for n in range(2, 7):
        g = gr.complete(n)
        assert np.array_equal(eccentricity_matrix(g), apsp(g))
        assert np.array_equal(eccentricity_matrix(g), g.adjacency_matrix())


def test_eccentricity_matrix_cocktail():
    expected = [[0, 0, 2, 0], [0, 0, 0, 2], [2, 0, 0, 0], [0, 2, 0, 0]]
    assert eccentricity_matrix(gr.cocktail_party(2)).tolist() == expected
    for n in range(2, 7):
        z = np.zeros((n, n), dtype=int)
        two = 2 * np.eye(n, dtype=int)
        assert np.array_equal(eccentricity_matrix(gr.cocktail_party(n)), np.block([[z, two], [two, z]]))


def test_eccentricity_invariants_on_random_graphs():
    rng = np.random.default_rng(11)
    for _ in range(60):
        g = random_connected(rng, int(rng.integers(2, 20)))
        d = apsp(g)
        e = eccentricities(d)
        m = eccentricity_matrix(g)
        assert np.array_equal(m, m.T) and not m.diagonal().any()
        assert np.all(m <= d)
        assert np.all((m == 0) | (m == d))
        for i in range(g.n):
            assert (m[i] == e[i]).any()
            for j in range(g.n):
                assert (m[i, j] != 0) == (i != j and d[i, j] == min(e[i], e[j]))


def test_support_graph_examples():
    assert support_graph(eccentricity_matrix(gr.complete(5))) == gr.complete(5)
    assert support_graph(eccentricity_matrix(gr.cycle(4))) == Graph(4, ((0, 2), (1, 3)))
    assert support_graph(eccentricity_matrix(gr.path(4))).edges == ((0, 2), (0, 3), (1, 3))


def test_irreducibility_examples():
    assert is_irreducible(eccentricity_matrix(gr.path(4)))
    assert not is_irreducible(eccentricity_matrix(gr.cycle(4)))
    assert is_irreducible(eccentricity_matrix(gr.complete(5)))
    assert not is_irreducible(eccentricity_matrix(gr.complete_multipartite((2, 3))))


@pytest.mark.parametrize("n", range(2, 8))
def test_trees_irreducible(n):
    assert all(is_irreducible(eccentricity_matrix(t)) for t in gr.enumerate_labeled_trees(n))


@pytest.mark.parametrize("n", [2, 3, 5, 6])
def test_batched_trees_match_scalar_path(n):
    trees = list(gr.enumerate_labeled_trees(n))
    ecc, maxdeg = tree_ecc_matrices(n, 0, len(trees))
    for k, t in enumerate(trees):
        assert np.array_equal(ecc[k], eccentricity_matrix(t))
        assert maxdeg[k] == max(t.degrees())
    assert supports_connected(ecc).all()


def test_batched_support_connectivity_negative():
    stack = np.stack([eccentricity_matrix(gr.cycle(4)), eccentricity_matrix(gr.path(4))])
    assert supports_connected(stack).tolist() == [False, True]


def test_serialization():
    m = eccentricity_matrix(gr.path(4))
    assert matrix_to_csv(m) == "0,0,2,3\n0,0,0,2\n2,0,0,0\n3,2,0,0\n"
    assert np.array_equal(matrix_from_json(matrix_to_json(m)), m)
