#!/usr/bin/env python
"""
coloring.py
Written by Tyler Sutterley (02/2026)
Equitable proper edge colorings

Colors edges with Delta+1 colors (Misra-Gries fans and cd-path
inversion), or with Delta colors for bipartite graphs (alternating
path recoloring), then rebalances color classes by swapping colors
along alternating paths until class sizes differ by at most one

UPDATE HISTORY:
    Written 02/2026
"""

from __future__ import annotations

import logging
import dataclasses
from xTuran.graph import Graph

__all__ = [
    "EdgeColoring",
    "equitable_edge_coloring",
]


@dataclasses.dataclass
class EdgeColoring:
    """
    Partition of the edges of a graph into color classes

    Attributes
    ----------
    classes: list
        sorted edge lists of each color
    """

    classes: list

    @property
    def m(self) -> int:
        """Number of colors"""
        return len(self.classes)

    @property
    def sizes(self) -> list:
        """Size of each color class"""
        return [len(c) for c in self.classes]

    def is_proper(self) -> bool:
        """No two edges of one class share a vertex"""
        for edges in self.classes:
            seen = set()
            for u, v in edges:
                if (u in seen) or (v in seen):
                    return False
                seen.update((u, v))
        return True

    def is_equitable(self) -> bool:
        """Class sizes pairwise differ by at most one"""
        return (max(self.sizes) - min(self.sizes)) <= 1 if self.m else True

    def covers(self, G: Graph) -> bool:
        """Classes are disjoint and cover the edges of a graph"""
        colored = [e for edges in self.classes for e in edges]
        return sorted(colored) == list(G.edges)


class _Palette:
    """Edge colors with per-vertex lookup of the incident colored edges"""

    def __init__(self, n: int):
        # at[x][c] is the neighbor joined to x by an edge of color c
        self.at = [dict() for _ in range(n)]
        self.color = {}

    def get(self, u: int, v: int):
        return self.color.get((min(u, v), max(u, v)))

    def is_free(self, x: int, c: int) -> bool:
        return c not in self.at[x]

    def free(self, x: int, palette: int) -> int:
        return next(c for c in range(palette) if c not in self.at[x])

    def uncolor(self, u: int, v: int):
        c = self.color.pop((min(u, v), max(u, v)))
        del self.at[u][c]
        del self.at[v][c]

    def set(self, u: int, v: int, c: int):
        if self.get(u, v) is not None:
            self.uncolor(u, v)
        assert self.is_free(u, c) and self.is_free(v, c), "color clash"
        self.color[(min(u, v), max(u, v))] = c
        self.at[u][c] = v
        self.at[v][c] = u

    def path(self, start: int, first: int, second: int) -> list:
        """Maximal path from a vertex alternating between two colors"""
        edges = []
        x, c = start, first
        while c in self.at[x]:
            y = self.at[x][c]
            edges.append((x, y, c))
            x, c = y, (second if c == first else first)
        return edges

    def swap(self, edges: list, first: int, second: int):
        """Exchange two colors along a path"""
        for x, y, _ in edges:
            self.uncolor(x, y)
        for x, y, c in edges:
            self.set(x, y, second if c == first else first)


# PURPOSE: proper edge coloring with Delta+1 colors
def _misra_gries(G: Graph, palette: int) -> _Palette:
    colors = _Palette(G.n)
    for u, v in G.edges:
        # maximal fan of u starting at v
        fan = [v]
        grow = True
        while grow:
            grow = False
            for c, w in sorted(colors.at[u].items()):
                if (w not in fan) and colors.is_free(fan[-1], c):
                    fan.append(w)
                    grow = True
                    break
        c = colors.free(u, palette)
        d = colors.free(fan[-1], palette)
        if c != d:
            colors.swap(colors.path(u, d, c), d, c)
        # first prefix of the fan that is still a fan with d free at its end
        end = None
        for i, w in enumerate(fan):
            if (i > 0) and not colors.is_free(fan[i - 1], colors.get(u, w)):
                break
            if colors.is_free(w, d):
                end = i
                break
        assert end is not None, f"fan rotation failed at edge ({u}, {v})"
        # rotate the fan prefix
        shifted = [colors.get(u, fan[i + 1]) for i in range(end)]
        for w in fan[1 : end + 1]:
            colors.uncolor(u, w)
        for i in range(end):
            colors.set(u, fan[i], shifted[i])
        colors.set(u, fan[end], d)
    return colors


# PURPOSE: proper edge coloring of a bipartite graph with Delta colors
def _bipartite(G: Graph, palette: int) -> _Palette:
    colors = _Palette(G.n)
    for u, v in G.edges:
        a = colors.free(u, palette)
        b = colors.free(v, palette)
        if colors.is_free(v, a):
            colors.set(u, v, a)
        elif colors.is_free(u, b):
            colors.set(u, v, b)
        else:
            # a/b path from v cannot reach u in a bipartite graph
            colors.swap(colors.path(v, a, b), a, b)
            colors.set(u, v, a)
    return colors


# PURPOSE: swap colors along alternating paths until classes are equitable
def _rebalance(colors: _Palette, n: int, m: int):
    while True:
        sizes = [0] * m
        for c in colors.color.values():
            sizes[c] += 1
        a = max(range(m), key=lambda c: (sizes[c], -c))
        b = min(range(m), key=lambda c: (sizes[c], c))
        if sizes[a] - sizes[b] <= 1:
            return
        # path component with more a-edges than b-edges
        for x in range(n):
            if colors.is_free(x, a) or not colors.is_free(x, b):
                continue
            edges = colors.path(x, a, b)
            excess = sum(1 if c == a else -1 for _, _, c in edges)
            if excess > 0:
                colors.swap(edges, a, b)
                break
        else:
            raise RuntimeError(f"No alternating path for colors {a}, {b}")


# PURPOSE: equitable proper edge coloring with m colors
def equitable_edge_coloring(G: Graph, m: int) -> EdgeColoring:
    """
    Proper edge coloring with ``m`` colors whose class sizes differ
    by at most one

    Parameters
    ----------
    G: Graph
        graph to color
    m: int
        number of colors: at least ``Delta+1``, or at least ``Delta``
        for bipartite graphs

    Returns
    -------
    coloring: EdgeColoring
        color classes
    """
    delta = G.max_degree
    bipartite = G.is_k_partite(2)
    if m < 1 or (m <= delta and not (bipartite and m == delta)):
        raise ValueError(f"Need at least {delta + 1} colors: {m}")
    if bipartite:
        colors = _bipartite(G, max(delta, 1))
    else:
        colors = _misra_gries(G, delta + 1)
    _rebalance(colors, G.n, m)
    classes = [[] for _ in range(m)]
    for edge, c in sorted(colors.color.items()):
        classes[c].append(edge)
    coloring = EdgeColoring(classes)
    assert coloring.is_proper(), "edge coloring is not proper"
    assert coloring.is_equitable(), "edge coloring is not equitable"
    logging.debug(f"Equitable coloring with class sizes {coloring.sizes}")
    return coloring
