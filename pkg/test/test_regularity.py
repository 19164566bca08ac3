#!/usr/bin/env python
"""
test_regularity.py (02/2026)
Verify regularity reports of random graphs
"""

import pytest
import numpy as np
import xTuran


# PURPOSE: test reports of complete and empty graphs
@pytest.mark.parametrize("N", [4, 8])
def test_extreme_graphs(N):
    report = xTuran.regularity.regularity_report(
        xTuran.Graph.complete(N), 1.0, samples=20, seed=1
    )
    assert report.max_degree_dev == 0.0
    assert report.max_codegree_dev == 0.0
    assert report.cross_edge_min_ratio == 1.0
    assert len(report.induced_violations) == 20
    for size, deviation in report.induced_violations:
        assert np.isclose(deviation, size / 2.0)
    report = xTuran.regularity.regularity_report(
        xTuran.Graph.empty(N), 0.5, samples=20, seed=1
    )
    assert report.max_degree_dev == 1.0
    assert report.max_codegree_dev == 1.0
    assert report.cross_edge_min_ratio == 0.0
    assert set(report.to_dict().keys()) == {
        "max_degree_dev",
        "max_codegree_dev",
        "induced_violations",
        "cross_edge_min_ratio",
    }


# PURPOSE: test dense random graphs are close to regular
def test_random_regularity():
    G = xTuran.generators.sample_gnp(60, 0.5, seed=11)
    report = xTuran.regularity.regularity_report(G, 0.5, samples=50, seed=2)
    assert report.max_degree_dev < 0.6
    assert report.cross_edge_min_ratio >= 0.0
    with pytest.raises(ValueError):
        xTuran.regularity.regularity_report(G, 0.0)
