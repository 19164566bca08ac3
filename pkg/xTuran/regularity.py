#!/usr/bin/env python
"""
regularity.py
Written by Tyler Sutterley (02/2026)
Empirical regularity reports for random graphs: degrees, codegrees,
induced edge counts and edges between disjoint vertex sets

PYTHON DEPENDENCIES:
    numpy: Scientific Computing Tools For Python
        https://numpy.org
        https://numpy.org/doc/stable/user/numpy-for-matlab-users.html

UPDATE HISTORY:
    Written 02/2026
"""

from __future__ import annotations

import logging
import dataclasses
import numpy as np
from xTuran.graph import Graph
from xTuran.utilities import random_generator

__all__ = ["RegularityReport", "regularity_report"]


@dataclasses.dataclass
class RegularityReport:
    """
    Deviations of a graph from its expected ``G(n,p)`` statistics

    Attributes
    ----------
    max_degree_dev: float
        max over vertices of ``|d(x) - (n-1)p| / ((n-1)p)``
    max_codegree_dev: float
        max over pairs of ``|d(x,y) - (n-2)p^2| / ((n-2)p^2)``
    induced_violations: list
        ``(|X|, ||G[X]| - |X|^2 p/2|)`` for each sampled ``X``
    cross_edge_min_ratio: float
        min over sampled disjoint ``S, T`` of ``|E(S,T)| / (|S||T|p)``
    """

    max_degree_dev: float
    max_codegree_dev: float
    induced_violations: list
    cross_edge_min_ratio: float

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)


def _relative(observed: np.ndarray, expected: float) -> float:
    if (expected <= 0) or (observed.size == 0):
        return 0.0
    return float(np.max(np.abs(observed - expected)) / expected)


# PURPOSE: compare graph statistics with their G(n,p) expectations
def regularity_report(
    G: Graph, p: float, samples: int = 100, seed=None
) -> RegularityReport:
    """
    Report degree, codegree, induced and cross edge deviations

    Parameters
    ----------
    G: Graph
        graph to inspect
    p: float
        reference edge probability
    samples: int, default 100
        number of sampled vertex sets
    seed: int, tuple or np.random.Generator
        seed for the vertex set samples

    Returns
    -------
    report: RegularityReport
        deviation statistics
    """
    if not (0.0 < float(p) <= 1.0):
        raise ValueError(f"Reference probability must be in (0, 1]: {p}")
    n = G.n
    rng = random_generator(seed)
    degree_dev = _relative(G.degrees.astype(float), (n - 1) * p)
    rows = np.triu_indices(n, k=1)
    codegrees = np.array(
        [G.codegree(x, y) for x, y in zip(*rows)], dtype=float
    )
    codegree_dev = _relative(codegrees, (n - 2) * p**2)
    induced = []
    ratios = []
    for _ in range(samples if n >= 2 else 0):
        # induced edge count of a random vertex subset
        size = int(rng.integers(2, n + 1))
        X = rng.choice(n, size=size, replace=False)
        deviation = abs(G.induced_edge_count(X) - size**2 * p / 2.0)
        induced.append((size, float(deviation)))
        # edges between a random split of another subset
        size = int(rng.integers(2, n + 1))
        Y = rng.choice(n, size=size, replace=False)
        split = int(rng.integers(1, size))
        S, T = Y[:split], Y[split:]
        cross = G.cross_edge_count(S, T)
        ratios.append(cross / (len(S) * len(T) * p))
    cross_ratio = float(min(ratios)) if ratios else float("nan")
    logging.debug(
        f"Regularity: degree {degree_dev:0.4f}, codegree {codegree_dev:0.4f}"
    )
    return RegularityReport(
        max_degree_dev=degree_dev,
        max_codegree_dev=codegree_dev,
        induced_violations=induced,
        cross_edge_min_ratio=cross_ratio,
    )
