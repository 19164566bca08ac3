#!/usr/bin/env python
"""
test_rooted.py (02/2026)
Verify rooted pattern densities, copy counts and expectation profiles
"""

import pytest
import numpy as np
from fractions import Fraction
import xTuran
from xTuran.rooted import (
    RootedGraph,
    density,
    is_balanced,
    is_strictly_balanced,
    balance_gap,
    count_copies,
    expectation_profile,
    audit_balanced_profile,
    h_ij,
    h_ij_subgraph,
    h_ij_density,
)

# rooted edge and one-rooted triangle
EDGE = RootedGraph([0, 1], [(0, 1)], [0])
TRIANGLE = RootedGraph.from_text("0 1 2 ; 0 ; 0-1 0-2 1-2")


# PURPOSE: test the rooted text form
def test_text():
    assert TRIANGLE.roots == (0,)
    assert TRIANGLE.edges == ((0, 1), (0, 2), (1, 2))
    assert RootedGraph.from_text(TRIANGLE.to_text()) == TRIANGLE
    assert RootedGraph.from_text("0,1 ; 0 ; 1-0") == EDGE
    with pytest.raises(ValueError):
        RootedGraph.from_text("0 1 ; 0")
    with pytest.raises(ValueError):
        RootedGraph.from_text("0 1 ; 2 ; 0-1")
    with pytest.raises(ValueError):
        RootedGraph.from_text("0 1 ; 0 ; 0-1-2")


# PURPOSE: test densities of small patterns
def test_density():
    assert density(EDGE) == 1
    assert density(TRIANGLE) == Fraction(3, 2)
    assert density(h_ij(5, 2, 4)) == 3
    # edges between roots are not counted
    H = RootedGraph([0, 1, 2], [(0, 1), (0, 2), (1, 2)], [0, 1])
    assert (H.v_H, H.e_H) == (1, 2)
    with pytest.raises(ValueError):
        density(RootedGraph([0, 1], [(0, 1)], [0, 1]))


# PURPOSE: test balance of small patterns
def test_balance():
    assert is_strictly_balanced(EDGE)
    assert is_strictly_balanced(TRIANGLE)
    assert balance_gap(TRIANGLE) == Fraction(1, 2)
    # a pendant edge hanging off a triangle
    H = RootedGraph.from_text("0 1 2 3 ; 0 ; 0-1 0-2 1-2 2-3")
    assert not is_balanced(H)
    assert balance_gap(H) < 0


# PURPOSE: test the rooted graphs of preceding pairs
@pytest.mark.parametrize("R", [5, 6, 7])
def test_h_ij(R):
    for j in range(2, R):
        for i in range(1, j):
            H = h_ij(R, i, j)
            assert H.roots == (0, i, j)
            assert len(H.vertices) == j + 1
            assert H.v_H == j - 2
            if H.v_H == 0:
                continue
            assert is_balanced(H)
            assert is_strictly_balanced(H) == ((i, j) != (2, 4))
            for k in range(1, j):
                if k == i == 1:
                    continue
                Hk = h_ij_subgraph(R, i, j, k)
                assert density(Hk) == h_ij_density(i, j, k)
    with pytest.raises(ValueError):
        h_ij(R, 2, R)


# PURPOSE: test rooted copy counts
@pytest.mark.parametrize("SEED", range(3))
def test_count_copies(SEED):
    G = xTuran.generators.sample_gnp(8, 0.5, seed=(SEED, 1))
    for x in range(G.n):
        assert count_copies(EDGE, G, (x,)) == G.degree(x)
        # ordered adjacent pairs in the neighborhood of x
        expected = 2 * G.induced_edge_count(G.neighbors(x))
        assert count_copies(TRIANGLE, G, (x,)) == expected
    K4 = xTuran.Graph.complete(4)
    assert count_copies(TRIANGLE, K4, (2,)) == 6
    H = RootedGraph.from_text("0 1 2 ; 0 1 ; 0-2 1-2")
    assert count_copies(H, K4, (1, 1)) == 0
    assert count_copies(H, K4, (0, 1)) == 2
    with pytest.raises(ValueError):
        count_copies(H, K4, (0,))


# PURPOSE: test expectation profiles
@pytest.mark.parametrize("N", [10, 50])
def test_expectation_profile(N):
    p = 0.3
    profile = expectation_profile(TRIANGLE, N, p)
    assert profile.E0 == pytest.approx(N**2 * p**3)
    assert profile.E0_exact == pytest.approx((N - 1) * (N - 2) * p**3)
    # the empty shape carries the full expectation scale
    assert profile.EL[""]["bound"] == pytest.approx(profile.E0)
    assert all(L["e_L"] < 3 for L in profile.EL.values())
    assert audit_balanced_profile(TRIANGLE, N, p) == []
    assert audit_balanced_profile(h_ij(5, 2, 4), N, p) == []


# PURPOSE: test the relative falling factorial correction
def test_expectation_limit():
    H = h_ij(6, 2, 5)
    profiles = [expectation_profile(H, N, 0.5) for N in (50, 100, 200)]
    ratios = [profile.E0_exact / profile.E0 for profile in profiles]
    assert np.all(np.diff(ratios) > 0)
    assert ratios[-1] == pytest.approx(1.0, abs=0.1)
