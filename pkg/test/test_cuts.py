#!/usr/bin/env python
"""
test_cuts.py (03/2026)
Verify cut sizes, defects, bad pairs, balanced cut families and rigidity
"""

import itertools
import pytest
from fractions import Fraction
import xTuran
from xTuran.cuts import (
    cut_edges,
    defect,
    phi,
    bad_pairs,
    d_pi,
    bad_vertices,
    enumerate_balanced_cuts,
    rigidity_analysis,
    crit,
    crit_by_deletion,
    cut_conjecture_stat,
    maximal_kr_free_cut,
)


# PURPOSE: test cut sizes
def test_cut_edges():
    K4 = xTuran.Graph.complete(4)
    assert cut_edges(K4, xTuran.Cut([[0, 1], [2, 3]])) == 4
    assert cut_edges(xTuran.Graph.empty(4), xTuran.Cut([[0, 1], [2, 3]])) == 0
    with pytest.raises(ValueError):
        cut_edges(K4, xTuran.Cut([[0, 1], [2]]))


# PURPOSE: test cut sizes against the induced edge identity
@pytest.mark.parametrize("SEED", range(5))
def test_cut_identity(SEED):
    G = xTuran.generators.sample_gnp(9, 0.5, seed=(SEED, 8))
    rng = xTuran.utilities.random_generator(SEED, 9)
    cut = xTuran.Cut.from_labels(rng.integers(0, 3, size=9), k=3)
    inside = sum(G.induced_edge_count(A) for A in cut.parts)
    assert cut_edges(G, cut) == len(G) - inside
    assert xTuran.cuts.cut_graph(G, cut).edge_count == cut_edges(G, cut)
    # exterior edges count once each
    exterior = [e for e in G.edges if cut.is_cross(*e)]
    assert phi(exterior, cut) == len(exterior)


# PURPOSE: test defects against the global maximum and a family
def test_defect():
    K4 = xTuran.Graph.complete(4)
    assert defect(K4, xTuran.Cut([[0], [1, 2, 3]])) == 1
    assert defect(K4, xTuran.Cut([[0, 1], [2, 3]])) == 0
    family = enumerate_balanced_cuts(4, 3, Fraction(1, 2))
    assert defect(K4, xTuran.Cut([[0, 2], [1, 3]]), family=family) == 0
    with pytest.raises(ValueError):
        defect(K4, xTuran.Cut([[0], [1, 2, 3]]), family=family)
    with pytest.raises(ValueError):
        defect(K4, xTuran.Cut([[0, 1], [2, 3]]), family="local")


# PURPOSE: test the weighted edge count
def test_phi():
    cut = xTuran.Cut([[0, 1], [2, 3], [4, 5]])
    assert phi([(0, 1)], cut) == 3
    assert phi([(2, 3)], cut) == 0
    assert phi([(0, 1), (0, 2), (3, 4)], cut) == 5
    assert phi(xTuran.Graph.complete(6), cut) == 3 + 12
    with pytest.raises(ValueError):
        phi([(0, 6)], cut)


# PURPOSE: test bad pairs of the first block
def test_bad_pairs():
    cut = xTuran.Cut([[0, 1], [2, 3], [4, 5]])
    assert bad_pairs(xTuran.Graph.complete(6), cut, 0.001, 1) == []
    assert bad_pairs(xTuran.Graph.empty(6), cut, 0.001, 0.5) == [(0, 1)]
    with pytest.raises(ValueError):
        bad_pairs(xTuran.Graph.complete(6), cut, 0, 1)


# PURPOSE: test bad pairs against a naive count of completions
@pytest.mark.parametrize("SEED", range(5))
def test_bad_pairs_naive(SEED):
    G = xTuran.generators.sample_gnp(8, 0.6, seed=(SEED, 2))
    cut = xTuran.Cut([[0, 1, 2], [3, 4, 5], [6, 7]])
    gamma, p = Fraction(1, 10), Fraction(3, 5)
    threshold = gamma * xTuran.constants.lambda_r(8, p, 4, exact=True)
    expected = []
    for x, y in itertools.combinations(cut.parts[0], 2):
        count = sum(
            all(G.has_edge(u, v) for u, v in [(x, a), (y, a), (x, b)])
            and G.has_edge(y, b) and G.has_edge(a, b)
            for a in cut.parts[1]
            for b in cut.parts[2]
        )
        if count < threshold:
            expected.append((x, y))
    assert bad_pairs(G, cut, gamma, p) == expected


# PURPOSE: test degree products and bad vertices
def test_bad_vertices():
    K4 = xTuran.Graph.complete(4)
    assert d_pi(K4, xTuran.Cut([[0, 1], [2], [3]]), 0) == 3
    cut = xTuran.Cut([[0, 1], [2, 3], [4, 5]])
    assert d_pi(xTuran.Graph.empty(6), cut, 0) == 0
    assert bad_vertices(xTuran.Graph.complete(6), cut, 1) == []
    # all neighbors in a single block
    G = xTuran.Graph.from_edges(
        6, [(0, 2), (0, 3), (1, 2), (1, 3), (1, 4), (1, 5)]
    )
    assert d_pi(G, cut, 0) == 0
    assert d_pi(G, cut, 1) == 4
    assert bad_vertices(G, cut, 1, r=4) == [0]
    with pytest.raises(ValueError):
        bad_vertices(G, cut, 1, r=5)


# PURPOSE: test realized families of balanced cuts
def test_balanced_cuts():
    family = enumerate_balanced_cuts(6, 3, 0.2)
    assert len(family) == 20
    assert all(len(cut.parts[0]) == 3 for cut in family)
    assert len(enumerate_balanced_cuts(6, 3, 0.2, X={0, 1})) == 4
    assert len(enumerate_balanced_cuts(6, 3, 0.2, X=range(4))) == 0
    family = enumerate_balanced_cuts(6, 4, 0.1)
    assert len(family) == 90
    assert family.members == sorted(family.members)
    with pytest.raises(ValueError):
        enumerate_balanced_cuts(20, 3, 0.2)


# PURPOSE: test rigidity of the complete tripartite graph
def test_rigidity():
    G = xTuran.Graph.complete_multipartite([2, 2, 2])
    family = enumerate_balanced_cuts(6, 4, Fraction(1, 10))
    report = rigidity_analysis(G, family, 0.6)
    assert report.max_value == 12
    assert len(report.max_cuts) == 6
    assert report.equivalent_pairs == 3
    assert report.rigid
    assert report.core == [(0, 1), (2, 3), (4, 5)]
    assert report.threshold == Fraction(12, 5)
    report = rigidity_analysis(G, family, 0.4)
    assert not report.rigid
    assert report.core is None
    assert crit(G, family, verify=True) == list(G.edges)
    empty = enumerate_balanced_cuts(6, 3, 0.2, X=range(4))
    with pytest.raises(ValueError, match="undefined rigidity"):
        rigidity_analysis(G, empty, 0.6)


# PURPOSE: test the empty graph has every balanced cut maximal
def test_rigidity_empty():
    family = enumerate_balanced_cuts(6, 3, 0.2, X={0, 1})
    report = rigidity_analysis(xTuran.Graph.empty(6), family, 0.5)
    assert len(report.max_cuts) == len(family)
    assert report.components[0] == (0, 1)
    assert all(len(C) == 1 for C in report.components[1:])
    assert crit(xTuran.Graph.empty(6), family) == []


# PURPOSE: test critical edges against the deletion characterization
@pytest.mark.parametrize("SEED", range(5))
def test_crit(SEED):
    G = xTuran.generators.sample_gnp(6, 0.6, seed=(SEED, 4))
    family = enumerate_balanced_cuts(6, 3, 0.5)
    assert crit(G, family) == crit_by_deletion(G, family)


# PURPOSE: test the cut statistic of small graphs
def test_cut_conjecture_stat():
    assert cut_conjecture_stat(xTuran.Graph.complete(4)) == pytest.approx(2 / 3)
    assert cut_conjecture_stat(xTuran.Graph.from_edges(2, [(0, 1)])) == 1.0
    assert cut_conjecture_stat(xTuran.Graph.cycle(4)) == 1.0
    assert cut_conjecture_stat(xTuran.Graph.empty(3)) == 0.0


# PURPOSE: test that maximum cuts are maximal K_r-free subgraphs
def test_maximal_kr_free_cut():
    K6 = xTuran.Graph.complete(6)
    cut = xTuran.Cut([[0, 1], [2, 3], [4, 5]])
    assert cut_edges(K6, cut) == xTuran.turan_number(6, 4)
    assert maximal_kr_free_cut(K6, cut)
    # no crossing edges between the second and third blocks
    missing = {(2, 4), (2, 5), (3, 4), (3, 5)}
    edges = [e for e in itertools.combinations(range(6), 2)]
    G = xTuran.Graph.from_edges(6, [e for e in edges if e not in missing])
    assert not maximal_kr_free_cut(G, cut)
    # blocks without internal edges
    assert maximal_kr_free_cut(xTuran.Graph.empty(6), cut)
