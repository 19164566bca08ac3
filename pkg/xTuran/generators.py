#!/usr/bin/env python
"""
generators.py
Written by Tyler Sutterley (01/2026)
Seeded random graph generators: G(n,p), G(n,M) and the
clique stopping-time process

PYTHON DEPENDENCIES:
    numpy: Scientific Computing Tools For Python
        https://numpy.org
        https://numpy.org/doc/stable/user/numpy-for-matlab-users.html

UPDATE HISTORY:
    Updated 02/2026: stopping-time process records the final edge
    Written 01/2026
"""

from __future__ import annotations

import logging
import numpy as np
from xTuran.graph import Graph
from xTuran.utilities import (
    popcount,
    pair_count,
    pair_from_index,
    random_generator,
)

__all__ = [
    "sample_gnp",
    "sample_gnm",
    "stopping_time_process",
    "StoppingTime",
]


# PURPOSE: sample the binomial random graph G(n,p)
def sample_gnp(n: int, p: float, seed=None) -> Graph:
    """
    Sample ``G(n,p)``: each pair present independently with
    probability ``p``

    Pairs are visited in lexicographic order and compared against
    one uniform draw each, so a fixed seed couples all values of ``p``

    Parameters
    ----------
    n: int
        number of vertices
    p: float
        edge probability
    seed: int, tuple or np.random.Generator
        seed for the counter-based generator

    Returns
    -------
    G: Graph
        sampled graph
    """
    if not (0.0 <= float(p) <= 1.0):
        raise ValueError(f"Edge probability outside [0, 1]: {p}")
    if int(n) < 1:
        raise ValueError(f"Graphs require at least one vertex: {n}")
    rng = random_generator(seed)
    uniform = rng.random(pair_count(n))
    return Graph.from_pairs(n, uniform < float(p))


# PURPOSE: partial Fisher-Yates shuffle over pair indices
def _pair_permutation(n: int, rng: np.random.Generator):
    """Lazily yield pair indices in uniformly random order"""
    N = pair_count(n)
    # positions displaced by earlier swaps
    swapped = {}
    for t in range(N):
        j = int(rng.integers(t, N))
        value = swapped.get(j, j)
        swapped[j] = swapped.get(t, t)
        yield value


# PURPOSE: sample the uniform random graph G(n,M)
def sample_gnm(n: int, m: int, seed=None) -> Graph:
    """
    Sample ``G(n,M)``: a uniformly random graph with exactly ``m`` edges

    Parameters
    ----------
    n: int
        number of vertices
    m: int
        number of edges
    seed: int, tuple or np.random.Generator
        seed for the counter-based generator

    Returns
    -------
    G: Graph
        sampled graph
    """
    N = pair_count(n)
    if not (0 <= int(m) <= N):
        raise ValueError(f"Edge count {m} outside [0, {N}]")
    rng = random_generator(seed)
    pairs = _pair_permutation(n, rng)
    edges = [pair_from_index(n, next(pairs)) for _ in range(int(m))]
    return Graph.from_edges(n, edges)


class StoppingTime:
    """
    Result of the clique stopping-time process

    Attributes
    ----------
    graph: Graph
        graph at the stopping time
    stop_index: int
        number of edges added
    last_edge: tuple or None
        final edge added
    """

    def __init__(self, graph: Graph, stop_index: int, last_edge=None):
        self.graph = graph
        self.stop_index = stop_index
        self.last_edge = last_edge

    def __iter__(self):
        # unpack as (graph, stop_index)
        return iter((self.graph, self.stop_index))

    def __repr__(self) -> str:
        return f"StoppingTime(stop_index={self.stop_index})"


# PURPOSE: add uniform random edges until every edge lies in a K_r
def stopping_time_process(n: int, r: int, seed=None) -> StoppingTime:
    """
    Add uniformly random edges without replacement and stop as soon
    as every present edge lies in a copy of ``K_r``

    Parameters
    ----------
    n: int
        number of vertices
    r: int
        clique order
    seed: int, tuple or np.random.Generator
        seed for the counter-based generator

    Returns
    -------
    result: StoppingTime
        stopped graph, number of edges added and the last edge
    """
    if r < 3:
        raise ValueError(f"Clique order must be at least 3: {r}")
    if n < r:
        raise ValueError(f"Need at least r={r} vertices: {n}")
    rng = random_generator(seed)
    rows = [0] * n
    # edges not yet covered by a K_r
    uncovered = set()
    last = None
    for index, k in enumerate(_pair_permutation(n, rng), start=1):
        x, y = pair_from_index(n, k)
        rows[x] |= 1 << y
        rows[y] |= 1 << x
        last = (x, y)
        graph = Graph(n, rows)
        common = rows[x] & rows[y]
        completions = []
        if popcount(common) >= r - 2:
            completions = graph.cliques(r - 2, within=common)
        if not completions:
            uncovered.add((x, y))
        for clique in completions:
            vertices = sorted((x, y) + clique)
            for i, u in enumerate(vertices):
                for v in vertices[i + 1 :]:
                    uncovered.discard((u, v))
        if not uncovered:
            logging.debug(f"Stopping time reached after {index} edges")
            return StoppingTime(graph, index, last)
    # complete graph: every edge lies in a K_r when n >= r
    return StoppingTime(Graph(n, rows), pair_count(n), last)
