#!/usr/bin/env python
"""
test_graph.py (01/2026)
Verify graph construction, clique enumeration and Turán numbers
"""

import itertools
import pytest
import numpy as np
import xTuran


# PURPOSE: test lexicographic pair indexing
@pytest.mark.parametrize("N", [2, 3, 7, 12])
def test_pair_index(N):
    pairs = list(itertools.combinations(range(N), 2))
    for k, (u, v) in enumerate(pairs):
        assert xTuran.utilities.pair_index(N, u, v) == k
        assert xTuran.utilities.pair_index(N, v, u) == k
        assert xTuran.utilities.pair_from_index(N, k) == (u, v)
    with pytest.raises(ValueError):
        xTuran.utilities.pair_from_index(N, len(pairs))


# PURPOSE: test bitset helpers
def test_bits():
    mask = 0b101101
    assert xTuran.utilities.popcount(mask) == 4
    assert list(xTuran.utilities.iter_bits(mask)) == [0, 2, 3, 5]
    assert xTuran.graph.vertex_mask([0, 2, 3, 5]) == mask
    assert xTuran.utilities.falling_factorial(5, 3) == 60
    assert xTuran.utilities.falling_factorial(2, 3) == 0


# PURPOSE: test seeded generators are reproducible
def test_random_generator():
    a = xTuran.utilities.random_generator(17, 3).random(5)
    b = xTuran.utilities.random_generator((17, 3)).random(5)
    c = xTuran.utilities.random_generator(17, 4).random(5)
    assert np.all(a == b)
    assert not np.all(a == c)
    with pytest.raises(ValueError):
        xTuran.utilities.random_generator(-1)


# PURPOSE: test unseeded generators draw fresh entropy
def test_unseeded_generator():
    a = xTuran.utilities.random_generator(None, 0).random(4)
    b = xTuran.utilities.random_generator(None, 0).random(4)
    c = xTuran.utilities.random_generator(0, 0).random(4)
    assert not np.all(a == b)
    assert not np.all(a == c)
    assert xTuran.utilities.master_seed(5) == 5
    assert xTuran.utilities.master_seed(None) >= 0


# PURPOSE: test graph construction and basic queries
def test_graph():
    G = xTuran.Graph.from_edges(4, [(0, 1), (2, 1), (2, 3)])
    assert G.edge_count == 3
    assert len(G) == 3
    assert G.edges == ((0, 1), (1, 2), (2, 3))
    assert G.has_edge(1, 0) and not G.has_edge(0, 2)
    assert G.neighbors(2) == [1, 3]
    assert np.all(G.degrees == [1, 2, 2, 1])
    assert G.max_degree == 2
    assert G.codegree(1, 3) == 1
    assert G.induced_edge_count([0, 1, 2]) == 2
    assert G.cross_edge_count([0, 1], [2, 3]) == 1
    H = G.add_edge(0, 3).remove_edge(1, 2)
    assert H.edges == ((0, 1), (0, 3), (2, 3))
    assert G.edge_count == 3
    assert xTuran.Graph.from_pairs(4, G.pair_vector()) == G
    assert G.to_dict() == dict(n=4, edges=[[0, 1], [1, 2], [2, 3]])
    with pytest.raises(ValueError):
        G.edge_subgraph([(0, 2)])
    with pytest.raises(ValueError):
        xTuran.Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        xTuran.Graph.from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        xTuran.Graph(0)


# PURPOSE: test clique enumeration against the binomial count
@pytest.mark.parametrize("N", [4, 5, 6])
def test_cliques(N):
    G = xTuran.Graph.complete(N)
    for k in range(1, N + 1):
        cliques = G.cliques(k)
        assert len(cliques) == G.count_cliques(k)
        assert cliques == list(itertools.combinations(range(N), k))
    assert G.has_clique(N) and not G.has_clique(N + 1)
    C = xTuran.Graph.cycle(5)
    assert C.count_cliques(3) == 0
    assert C.is_kr_free(3)


# PURPOSE: test partite checks
def test_partite():
    assert xTuran.Graph.cycle(6).is_k_partite(2)
    assert not xTuran.Graph.cycle(5).is_k_partite(2)
    assert xTuran.Graph.cycle(5).is_k_partite(3)
    assert xTuran.Graph.empty(5).is_k_partite(1)
    assert xTuran.Graph.complete(4).is_k_partite(4)
    assert not xTuran.Graph.complete(4).is_k_partite(3)


# PURPOSE: test Turán graphs and numbers
@pytest.mark.parametrize("R", [2, 3, 4, 5])
def test_turan_number(R):
    for N in range(1, 11):
        T = xTuran.turan_graph(N, R)
        assert T.edge_count == xTuran.turan_number(N, R)
        assert T.is_kr_free(R)
        # closed form (1 - 1/(r-1)) n^2 / 2 rounded down
        assert T.edge_count <= (1 - 1 / (R - 1)) * N**2 / 2
    assert xTuran.turan_number(5, 3) == 6
    assert xTuran.turan_number(6, 3) == 9
    assert xTuran.turan_number(5, 4) == 8
    with pytest.raises(ValueError):
        xTuran.turan_graph(5, 1)


# PURPOSE: test cut construction
def test_cut():
    cut = xTuran.Cut([[2, 0], [1], [3]])
    assert cut.parts == ((0, 2), (1,), (3,))
    assert cut.n == 4 and cut.k == 3 and cut.r == 4
    assert np.all(cut.labels == [0, 1, 0, 2])
    assert cut.is_cross(0, 1) and not cut.is_cross(0, 2)
    assert xTuran.Cut.from_labels([0, 1, 0, 2]) == cut
    assert xTuran.Cut([[1], [0, 2], [3]]).canonical() == cut.canonical()
    with pytest.raises(ValueError):
        xTuran.Cut([[0, 1], [1, 2]])
    with pytest.raises(ValueError):
        cut.check(5)
