#!/usr/bin/env python
"""
test_generators.py (02/2026)
Verify random graph models and the clique stopping-time process
"""

import pytest
import numpy as np
import xTuran


# PURPOSE: test G(n,p) at the endpoint probabilities
@pytest.mark.parametrize("SEED", [0, 1, 2])
def test_gnp_endpoints(SEED):
    assert xTuran.generators.sample_gnp(5, 0.0, seed=SEED).edge_count == 0
    assert xTuran.generators.sample_gnp(5, 1.0, seed=SEED).edge_count == 10
    with pytest.raises(ValueError):
        xTuran.generators.sample_gnp(5, 1.5, seed=SEED)


# PURPOSE: test G(n,p) is reproducible and monotone in p
def test_gnp_coupling():
    G1 = xTuran.generators.sample_gnp(12, 0.3, seed=(4, 1))
    G2 = xTuran.generators.sample_gnp(12, 0.3, seed=(4, 1))
    G3 = xTuran.generators.sample_gnp(12, 0.6, seed=(4, 1))
    assert G1 == G2
    # same uniform draws so the sparser graph is a subgraph
    assert set(G1.edges) <= set(G3.edges)


# PURPOSE: test the mean edge count of G(n,p)
def test_gnp_mean():
    N, p, trials = 10, 0.4, 400
    counts = [
        xTuran.generators.sample_gnp(N, p, seed=(9, k)).edge_count
        for k in range(trials)
    ]
    mean = 45 * p
    stderr = np.sqrt(45 * p * (1 - p) / trials)
    assert np.abs(np.mean(counts) - mean) < 5.0 * stderr


# PURPOSE: test G(n,M) edge counts
@pytest.mark.parametrize("M", [0, 1, 20, 44, 45])
def test_gnm(M):
    G = xTuran.generators.sample_gnm(10, M, seed=3)
    assert G.edge_count == M
    if M == 45:
        assert G == xTuran.Graph.complete(10)
    with pytest.raises(ValueError):
        xTuran.generators.sample_gnm(10, 46, seed=3)


# PURPOSE: test the stopping-time process
@pytest.mark.parametrize("SEED", [0, 1, 2, 3])
def test_stopping_time(SEED):
    # three vertices stop exactly when the triangle closes
    result = xTuran.generators.stopping_time_process(3, 3, seed=SEED)
    assert result.stop_index == 3
    assert result.graph == xTuran.Graph.complete(3)
    # every edge lies in a triangle at the stopping time
    G, index = xTuran.generators.stopping_time_process(6, 3, seed=SEED)
    assert G.edge_count == index
    for u, v in G.edges:
        assert G.codegree(u, v) >= 1
    # and the graph before the last edge was not yet covered
    result = xTuran.generators.stopping_time_process(6, 3, seed=SEED)
    previous = result.graph.remove_edge(*result.last_edge)
    covered = all(previous.codegree(u, v) >= 1 for u, v in previous.edges)
    assert not covered or previous.edge_count == 0


# PURPOSE: test the stopping-time process rejects small orders
def test_stopping_time_errors():
    with pytest.raises(ValueError):
        xTuran.generators.stopping_time_process(5, 2)
    with pytest.raises(ValueError):
        xTuran.generators.stopping_time_process(3, 4)
