#!/usr/bin/env python
"""
test_counts.py (02/2026)
Verify the K_r and K_r^- counting functionals
"""

import itertools
import pytest
import xTuran
from xTuran.counts import (
    kappa,
    kappa_choices,
    kr_minus_family,
    tau,
    sigma,
    kr_minus_sets,
    delta_bar_kr_minus,
)


# PURPOSE: test completions of a pair in complete graphs
def test_kappa():
    K5 = xTuran.Graph.complete(5)
    assert kappa(K5, 4, [(0, 1)]) == 3
    K6 = xTuran.Graph.complete(6)
    assert kappa(K6, 4, [(0, 1), [2, 3], [4, 5]]) == 4
    assert len(kappa_choices(K6, 4, [(0, 1), [2, 3], [4, 5]])) == 4
    assert kappa(xTuran.Graph.empty(6), 4, [(0, 1), [2, 3], [4, 5]]) == 0
    # the pair itself need not be an edge
    G = K5.remove_edge(0, 1)
    assert kappa(G, 4, [(0, 1)]) == 3
    with pytest.raises(ValueError):
        kappa(K5, 3, [(0, 1), [2, 3], [4]])
    with pytest.raises(ValueError):
        kappa(K5, 4, [(0, 0)])


# PURPOSE: test collections of subsets as arguments
def test_kappa_collections():
    K6 = xTuran.Graph.complete(6)
    # any pair of {0,1,2} with two more vertices of K_6
    pairs = list(itertools.combinations(range(3), 2))
    assert kappa(K6, 4, [pairs]) == 3 * 6
    # Y_1 and Y_2 must be disjoint
    assert kappa(K6, 4, [[(0, 1), (2, 3)], [(0, 1), (4, 5)]]) == 3
    with pytest.raises(ValueError):
        kappa(K6, 4, [[(0, 1), (2, 3, 4)]])


# PURPOSE: test explicit K_r^- copies
def test_kr_minus_family():
    K6 = xTuran.Graph.complete(6)
    family = kr_minus_family(K6, (0, 1), [[2, 3], [4, 5]])
    assert len(family) == 4
    for pairs in family:
        assert len(pairs) == 5
        assert (0, 1) not in pairs
    assert frozenset([(0, 2), (1, 2), (0, 4), (1, 4), (2, 4)]) in family
    with pytest.raises(ValueError):
        kr_minus_family(K6, (0, 1), [[1, 3], [4, 5]])


# PURPOSE: test ordered cliques across vertex sets
def test_tau():
    G = xTuran.Graph.complete_multipartite([3, 3])
    assert tau(G, [[0, 1, 2], [3, 4, 5]]) == 9
    assert tau(G, [[0, 1, 2], []]) == 0
    # repeated copies of one set count ordered cliques
    K4 = xTuran.Graph.complete(4)
    assert tau(K4, [range(4)] * 3) == 24
    with pytest.raises(ValueError):
        tau(K4, [[0, 1], [1, 2]])


# PURPOSE: test pairs completing a K_r^- over a pair set
def test_sigma():
    K4 = xTuran.Graph.complete(4)
    assert sigma(K4, [(0, 1)], 4) == 1
    assert sigma(K4, [], 4) == 0
    K6 = xTuran.Graph.complete(6)
    # pairs of K_6 avoiding 0 and 1
    assert sigma(K6, [(0, 1)], 5) == 6
    with pytest.raises(ValueError):
        sigma(K4, [(0, 1)], 3)


# PURPOSE: test the exact Delta-bar against the closed-form bound
@pytest.mark.parametrize("R", [[(0, 1)], [(0, 1), (2, 3)], [(0, 1), (0, 2)]])
def test_delta_bar(R):
    N, p, r = 6, 0.5, 4
    sets = kr_minus_sets(N, r, R)
    assert len(sets) == len(R) * 6
    exact, bound = delta_bar_kr_minus(N, p, r, R)
    # naive double sum over intersecting ordered pairs
    naive = sum(
        xTuran.counts.product_moment(K, L, p)
        for K in sets
        for L in sets
        if K & L
    )
    assert exact == pytest.approx(naive)
    assert exact <= bound
    with pytest.raises(ValueError):
        delta_bar_kr_minus(20, p, r, R)
