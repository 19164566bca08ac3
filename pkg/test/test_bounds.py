#!/usr/bin/env python
"""
test_bounds.py (03/2026)
Verify Chernoff, Janson and Riordan-Warnke type tail bounds
"""

import pytest
import numpy as np
import xTuran
from xTuran.bounds import (
    chernoff_upper,
    chernoff_lower,
    weighted_bernoulli_bound,
    TailFamily,
    TailBoundInput,
    family_stats,
    janson_bound,
    trw_bound,
)


# PURPOSE: test binomial Chernoff bounds
def test_chernoff():
    assert chernoff_upper(100, 30) == pytest.approx(np.exp(-900 / 220))
    assert chernoff_lower(100, 30) == pytest.approx(np.exp(-900 / 200))
    assert chernoff_upper(5, 0) == 1.0
    assert chernoff_lower(5, 0) == 1.0
    with pytest.raises(ValueError):
        chernoff_upper(0, 1)
    with pytest.raises(ValueError):
        chernoff_lower(5, -1)


# PURPOSE: test the weighted Bernoulli bound
def test_weighted_bernoulli():
    assert weighted_bernoulli_bound(10, 10, 1, 1) == pytest.approx(np.exp(-2.5))
    # deviation at the boundary eta*psi
    assert weighted_bernoulli_bound(10, 5, 0.5, 2) == pytest.approx(
        np.exp(-2.5 / 8)
    )
    with pytest.raises(ValueError):
        weighted_bernoulli_bound(10, 4, 0.5, 2)
    with pytest.raises(ValueError):
        weighted_bernoulli_bound(10, 10, 1.5, 2)


# PURPOSE: test statistics of the triangles of K_4
def test_family_stats():
    F = TailFamily.clique_family(4, 3)
    assert F.ground_size == 6 and len(F) == 4
    stats = family_stats(F, 0.5)
    assert stats.mu == pytest.approx(0.5)
    assert stats.delta_bar == pytest.approx(0.875)
    # singleton groups make Theta-bar equal to Delta-bar
    assert stats.theta_bar == pytest.approx(stats.delta_bar)
    assert stats.gamma_overlap == 0.0
    bound = janson_bound(stats.with_t(0.25))
    assert bound == pytest.approx(np.exp(-0.0625 / 1.75))
    assert bound == pytest.approx(0.96491, abs=1e-5)
    assert janson_bound(stats) == 1.0
    with pytest.raises(ValueError):
        janson_bound(stats.with_t(0.6))


# PURPOSE: test disjoint events only depend on themselves
def test_disjoint_family():
    F = TailFamily.flat(6, [[0, 1], [2, 3], [4]])
    stats = family_stats(F, 0.3)
    assert stats.mu == pytest.approx(0.09 + 0.09 + 0.3)
    assert stats.delta_bar == pytest.approx(stats.mu)


# PURPOSE: test the Riordan-Warnke type bound
def test_trw_bound():
    stats = TailBoundInput(
        mu=10, delta_bar=5, theta_bar=5, gamma_overlap=1, t=3
    )
    assert trw_bound(stats) == pytest.approx(np.exp(-0.4))
    assert trw_bound(stats.with_t(1)) == 1.0
    assert trw_bound(stats, refined=True) <= trw_bound(stats)
    with pytest.raises(ValueError):
        trw_bound(stats.with_t(0.5))
    with pytest.raises(ValueError):
        TailBoundInput(mu=10, delta_bar=5, theta_bar=6)


# PURPOSE: test grouped families
def test_grouped_family():
    F = TailFamily(5, [[[0, 1], [1, 2]], [[2, 3]], [[3, 4], [0, 4]]])
    assert not F.is_flat
    assert F.indices == [(0, 0), (0, 1), (1, 0), (2, 0), (2, 1)]
    assert TailFamily.from_json(F.to_json()).events == F.events
    p = 0.4
    stats = family_stats(F, p)
    assert stats.mu == pytest.approx(5 * p**2)
    # pairs within an outer event sharing one element
    assert stats.gamma_overlap == pytest.approx(2 * p**3)
    assert stats.theta_bar <= stats.delta_bar
    t = min(stats.mu, stats.gamma_overlap + 0.1)
    assert trw_bound(stats.with_t(t)) <= 1.0
    assert janson_bound(stats.with_t(t)) <= 1.0
    stats = family_stats(F, p, neighbors=1)
    assert stats.theta_fallback
    assert stats.theta_bar == stats.delta_bar
    with pytest.raises(ValueError):
        TailFamily(3, [[[0, 3]]])
    with pytest.raises(ValueError):
        TailFamily(3, [[]])
