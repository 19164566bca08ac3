#!/usr/bin/env python
"""
test_solvers.py (03/2026)
Verify the extremal solvers against closed forms and exhaustive search
"""

import pytest
import xTuran
from xTuran.solvers import (
    max_kr_free,
    max_partite,
    turan_gap,
    all_max_kr_free_partite,
    brute_max_kr_free,
    brute_max_partite,
    ilp_max_kr_free,
)


# PURPOSE: test largest K_r-free subgraphs of small fixed graphs
def test_max_kr_free():
    C5 = xTuran.Graph.cycle(5)
    K5 = xTuran.Graph.complete(5)
    assert max_kr_free(C5, 3).value == 5
    assert max_kr_free(K5, 3).value == 6
    assert max_kr_free(K5, 4).value == 8
    result = max_kr_free(K5, 3, turan_bound=False)
    assert result.value == 6 and result.optimal
    assert len(result.witness) == 6
    with pytest.raises(ValueError):
        max_kr_free(K5, 2)


# PURPOSE: test largest k-partite subgraphs of small fixed graphs
def test_max_partite():
    C5 = xTuran.Graph.cycle(5)
    K5 = xTuran.Graph.complete(5)
    assert max_partite(C5, 2).value == 4
    assert max_partite(K5, 2).value == 6
    result = max_partite(K5, 3)
    assert result.value == 8
    assert sorted(len(A) for A in result.witness.parts) == [1, 2, 2]
    # as many parts as vertices keeps every edge
    assert max_partite(C5, 5).value == 5
    assert max_partite(K5, 7).value == 10
    with pytest.raises(ValueError):
        max_partite(K5, 0)


# PURPOSE: test the solvers on complete graphs against Turán numbers
@pytest.mark.parametrize("R", [3, 4, 5])
@pytest.mark.parametrize("N", [4, 6, 8])
def test_complete_graphs(N, R):
    K = xTuran.Graph.complete(N)
    t, b, gap = turan_gap(K, R)
    assert t == b == xTuran.turan_number(N, R)
    assert gap == 0


# PURPOSE: test the Turán gap of small fixed graphs
def test_turan_gap():
    assert tuple(turan_gap(xTuran.Graph.complete(6), 3)) == (9, 9, 0)
    assert tuple(turan_gap(xTuran.Graph.cycle(5), 3)) == (5, 4, 1)
    assert tuple(turan_gap(xTuran.Graph.empty(4), 3)) == (0, 0, 0)
    result = turan_gap(xTuran.Graph.cycle(5), 3)
    assert result.optimal
    assert result.kr_free.to_dict()["value"] == 5
    assert len(result.partite.to_dict()["witness_parts"]) == 2


# PURPOSE: test the solvers against exhaustive search
@pytest.mark.parametrize("SEED", range(8))
@pytest.mark.parametrize("P", [0.4, 0.7])
def test_exhaustive(SEED, P):
    G = xTuran.generators.sample_gnp(6, P, seed=(SEED, 3))
    for r in (3, 4):
        t = max_kr_free(G, r)
        assert t.value == brute_max_kr_free(G, r).value
        assert t.value == max_kr_free(G, r, turan_bound=False).value
        assert max_partite(G, r - 1).value == brute_max_partite(G, r - 1).value
        assert (r - 1) * max_partite(G, r - 1).value >= (r - 2) * len(G)


# PURPOSE: test the integer program on graphs beyond subset scans
@pytest.mark.parametrize("SEED", range(4))
def test_integer_program(SEED):
    K5 = xTuran.Graph.complete(5)
    assert ilp_max_kr_free(K5, 3).value == 6
    assert ilp_max_kr_free(K5, 4).value == 8
    C5 = xTuran.Graph.cycle(5)
    assert ilp_max_kr_free(C5, 3).value == 5
    G = xTuran.generators.sample_gnp(10, 0.7, seed=(SEED, 5))
    for r in (3, 4):
        result = ilp_max_kr_free(G, r)
        assert result.value == max_kr_free(G, r).value
        F = xTuran.Graph.from_edges(G.n, result.witness_edges)
        assert F.is_kr_free(r)


# PURPOSE: test chunked partite search matches a single chunk
def test_brute_partite_chunks():
    G = xTuran.generators.sample_gnp(9, 0.5, seed=11)
    for k in (2, 3):
        whole = brute_max_partite(G, k)
        parts = brute_max_partite(G, k, chunk=7)
        assert whole.value == parts.value == max_partite(G, k).value
        assert whole.witness_cut.parts == parts.witness_cut.parts
        assert whole.nodes_explored == k ** 8
    assert brute_max_partite(xTuran.Graph.empty(3), 2).value == 0
    with pytest.raises(ValueError):
        brute_max_partite(xTuran.Graph.complete(15), 3, limit=1000)


# PURPOSE: test exhausted node budgets are reported
def test_budget():
    K6 = xTuran.Graph.complete(6)
    result = max_kr_free(K6, 3, budget=1, turan_bound=False)
    assert result.time_budget_hit and not result.optimal
    assert result.value <= 9
    result = max_partite(K6, 2, budget=1)
    assert result.time_budget_hit and not result.optimal
    gap = turan_gap(K6, 3, budget=1)
    assert gap.gap is None and not gap.optimal


# PURPOSE: test whether all largest K_r-free subgraphs are partite
def test_all_max_kr_free_partite():
    assert all_max_kr_free_partite(xTuran.Graph.complete(5), 3)
    assert not all_max_kr_free_partite(xTuran.Graph.cycle(5), 3)
    cuts = xTuran.solvers.all_max_partitions(xTuran.Graph.cycle(4), 2)
    assert [c.canonical() for c in cuts] == [((0, 2), (1, 3))]
    with pytest.raises(ValueError):
        all_max_kr_free_partite(xTuran.Graph.complete(10), 3)
