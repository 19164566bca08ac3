#!/usr/bin/env python
"""
test_coloring.py (02/2026)
Verify equitable proper edge colorings
"""

import pytest
import xTuran


# PURPOSE: test colorings of small fixed graphs
def test_small_colorings():
    # path on three vertices with two colors
    P3 = xTuran.Graph.from_edges(3, [(0, 1), (1, 2)])
    coloring = xTuran.coloring.equitable_edge_coloring(P3, 2)
    assert sorted(coloring.sizes) == [1, 1]
    assert coloring.is_proper() and coloring.covers(P3)
    # star with three leaves gets singleton classes
    star = xTuran.Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    coloring = xTuran.coloring.equitable_edge_coloring(star, 3)
    assert coloring.sizes == [1, 1, 1]
    assert coloring.covers(star)
    # odd cycles need Delta+1 colors
    C5 = xTuran.Graph.cycle(5)
    with pytest.raises(ValueError):
        xTuran.coloring.equitable_edge_coloring(C5, 2)
    coloring = xTuran.coloring.equitable_edge_coloring(C5, 3)
    assert sorted(coloring.sizes) == [1, 2, 2]


# PURPOSE: test colorings of random graphs with extra colors
@pytest.mark.parametrize("SEED", range(10))
@pytest.mark.parametrize("EXTRA", [1, 3])
def test_random_colorings(SEED, EXTRA):
    G = xTuran.generators.sample_gnp(12, 0.5, seed=(SEED, 5))
    m = G.max_degree + EXTRA
    coloring = xTuran.coloring.equitable_edge_coloring(G, m)
    assert coloring.m == m
    assert coloring.is_proper()
    assert coloring.is_equitable()
    assert coloring.covers(G)


# PURPOSE: test Delta colors suffice for bipartite graphs
def test_bipartite_coloring():
    G = xTuran.Graph.complete_multipartite([3, 4])
    coloring = xTuran.coloring.equitable_edge_coloring(G, 4)
    assert coloring.sizes == [3, 3, 3, 3]
    assert coloring.is_proper() and coloring.covers(G)
