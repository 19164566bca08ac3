#!/usr/bin/env python
"""
graph.py
Written by Tyler Sutterley (01/2026)
Undirected simple graphs on vertices 0..n-1 stored as bitset rows

PYTHON DEPENDENCIES:
    numpy: Scientific Computing Tools For Python
        https://numpy.org
        https://numpy.org/doc/stable/user/numpy-for-matlab-users.html

UPDATE HISTORY:
    Updated 03/2026: added Turán graphs and partite checks
    Written 01/2026
"""

from __future__ import annotations

import itertools
import numpy as np
from xTuran.utilities import (
    reify,
    popcount,
    iter_bits,
    pair_count,
    pair_index,
    pair_from_index,
)

__all__ = [
    "Graph",
    "Cut",
    "vertex_mask",
    "turan_graph",
    "turan_number",
]


def vertex_mask(vertices) -> int:
    """Bitset of an iterable of vertex indices"""
    mask = 0
    for v in vertices:
        mask |= 1 << int(v)
    return mask


class Graph:
    """
    Undirected simple graph with bitset adjacency rows

    Graphs are immutable: edge modifications return new graphs

    Attributes
    ----------
    n: int
        number of vertices
    rows: tuple
        adjacency bitset of each vertex
    """

    def __init__(self, n: int, rows: tuple | list | None = None):
        if int(n) < 1:
            raise ValueError(f"Graphs require at least one vertex: {n}")
        self.n = int(n)
        if rows is None:
            rows = (0,) * self.n
        if len(rows) != self.n:
            raise ValueError(f"Expected {self.n} adjacency rows")
        self.rows = tuple(int(row) for row in rows)
        full = (1 << self.n) - 1
        for x, row in enumerate(self.rows):
            assert not (row >> x) & 1, f"self-loop at vertex {x}"
            assert not row & ~full, f"row {x} outside vertex range"
            for y in iter_bits(row):
                assert (self.rows[y] >> x) & 1, f"asymmetric pair {x},{y}"

    # PURPOSE: build a graph from a list of edges
    @classmethod
    def from_edges(cls, n: int, edges):
        """
        Create a graph from an iterable of vertex pairs

        Parameters
        ----------
        n: int
            number of vertices
        edges: iterable
            vertex pairs ``(u, v)``
        """
        rows = [0] * int(n)
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n) or not (0 <= v < n):
                raise ValueError(f"Edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"Self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def empty(cls, n: int):
        """Graph with no edges"""
        return cls(n)

    @classmethod
    def complete(cls, n: int):
        """Complete graph ``K_n``"""
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << x) for x in range(n)])

    @classmethod
    def cycle(cls, n: int):
        """Cycle ``C_n`` on vertices in order"""
        if n < 3:
            raise ValueError(f"Cycles require at least 3 vertices: {n}")
        return cls.from_edges(n, [(x, (x + 1) % n) for x in range(n)])

    @classmethod
    def complete_multipartite(cls, sizes: list | tuple):
        """
        Complete multipartite graph with consecutive blocks

        Parameters
        ----------
        sizes: list or tuple
            block sizes
        """
        n = sum(sizes)
        block = np.repeat(np.arange(len(sizes)), sizes)
        edges = [
            (u, v)
            for u, v in itertools.combinations(range(n), 2)
            if block[u] != block[v]
        ]
        return cls.from_edges(n, edges)

    @classmethod
    def from_pairs(cls, n: int, indicator):
        """
        Create a graph from a pair-indicator vector in lexicographic
        pair order

        Parameters
        ----------
        n: int
            number of vertices
        indicator: np.ndarray
            boolean vector of length ``n(n-1)/2``
        """
        indicator = np.asarray(indicator, dtype=bool)
        if indicator.shape != (pair_count(n),):
            raise ValueError(f"Expected {pair_count(n)} pair indicators")
        edges = [pair_from_index(n, int(k)) for k in np.flatnonzero(indicator)]
        return cls.from_edges(n, edges)

    def __getitem__(self, x: int) -> int:
        return self.rows[x]

    def __len__(self) -> int:
        return self.edge_count

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n) and (self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"

    @reify
    def edge_count(self) -> int:
        """Number of edges"""
        return sum(popcount(row) for row in self.rows) // 2

    @reify
    def edges(self) -> tuple:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order"""
        return tuple(
            (u, v)
            for u in range(self.n)
            for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))
        )

    @reify
    def degrees(self) -> np.ndarray:
        """Degree of each vertex"""
        return np.array([popcount(row) for row in self.rows], dtype=int)

    @property
    def max_degree(self) -> int:
        """Maximum degree"""
        return int(self.degrees.max())

    def has_edge(self, u: int, v: int) -> bool:
        """Check if ``{u, v}`` is an edge"""
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, x: int) -> list:
        """Sorted neighborhood of a vertex"""
        return list(iter_bits(self.rows[x]))

    def degree(self, x: int, within: int | None = None) -> int:
        """
        Degree of a vertex, optionally into a vertex bitset

        Parameters
        ----------
        x: int
            vertex
        within: int or None, default None
            bitset restricting the counted neighbors
        """
        row = self.rows[x]
        if within is not None:
            row &= within
        return popcount(row)

    def codegree(self, x: int, y: int) -> int:
        """Number of common neighbors of two vertices"""
        return popcount(self.rows[x] & self.rows[y])

    def common_neighbors(self, vertices) -> int:
        """Bitset of common neighbors of a collection of vertices"""
        mask = (1 << self.n) - 1
        for v in vertices:
            mask &= self.rows[v]
        return mask

    def induced_edge_count(self, vertices) -> int:
        """Number of edges of the induced subgraph ``G[A]``"""
        mask = vertex_mask(vertices)
        return sum(popcount(self.rows[x] & mask) for x in iter_bits(mask)) // 2

    def cross_edge_count(self, S, T) -> int:
        """Number of edges joining two disjoint vertex sets"""
        smask, tmask = vertex_mask(S), vertex_mask(T)
        if smask & tmask:
            raise ValueError("Vertex sets must be disjoint")
        return sum(popcount(self.rows[x] & tmask) for x in iter_bits(smask))

    def edge_subgraph(self, edges):
        """Spanning subgraph with the given edges of this graph"""
        for u, v in edges:
            if not self.has_edge(u, v):
                raise ValueError(f"({u}, {v}) is not an edge of the graph")
        return Graph.from_edges(self.n, edges)

    def add_edge(self, u: int, v: int):
        """Return a copy with the edge ``{u, v}`` added"""
        if u == v:
            raise ValueError(f"Self-loop at vertex {u}")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows)

    def remove_edge(self, u: int, v: int):
        """Return a copy with the edge ``{u, v}`` removed"""
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    def pair_vector(self) -> np.ndarray:
        """Boolean pair indicators in lexicographic pair order"""
        indicator = np.zeros(pair_count(self.n), dtype=bool)
        for u, v in self.edges:
            indicator[pair_index(self.n, u, v)] = True
        return indicator

    # PURPOSE: enumerate the k-cliques within a candidate bitset
    def cliques(self, k: int, within: int | None = None) -> list:
        """
        Enumerate ``k``-cliques in lexicographic order

        Parameters
        ----------
        k: int
            clique order
        within: int or None, default None
            bitset of allowed vertices

        Returns
        -------
        cliques: list
            sorted vertex tuples
        """
        if within is None:
            within = (1 << self.n) - 1
        found = []
        self._extend((), within, k, found)
        return found

    def _extend(self, clique: tuple, candidates: int, k: int, found: list):
        if k == 0:
            found.append(clique)
            return
        for v in iter_bits(candidates):
            rest = candidates & self.rows[v] & ~((1 << (v + 1)) - 1)
            if popcount(rest) >= k - 1:
                self._extend(clique + (v,), rest, k - 1, found)

    def count_cliques(self, k: int, within: int | None = None) -> int:
        """Number of ``k``-cliques inside a candidate bitset"""
        if within is None:
            within = (1 << self.n) - 1
        if k == 0:
            return 1
        if k == 1:
            return popcount(within)
        count = 0
        for v in iter_bits(within):
            rest = within & self.rows[v] & ~((1 << (v + 1)) - 1)
            if popcount(rest) >= k - 1:
                count += self.count_cliques(k - 1, rest)
        return count

    def has_clique(self, k: int, within: int | None = None) -> bool:
        """Check for a ``k``-clique inside a candidate bitset"""
        if within is None:
            within = (1 << self.n) - 1
        if k <= 0:
            return True
        for v in iter_bits(within):
            rest = within & self.rows[v] & ~((1 << (v + 1)) - 1)
            if popcount(rest) >= k - 1 and self.has_clique(k - 1, rest):
                return True
        return False

    def is_kr_free(self, r: int) -> bool:
        """Check that the graph contains no ``K_r``"""
        return not self.has_clique(r)

    # PURPOSE: check for a proper vertex coloring with k colors
    def is_k_partite(self, k: int) -> bool:
        """
        Check if the graph is ``k``-partite

        Parameters
        ----------
        k: int
            number of parts
        """
        if k >= self.n or self.edge_count == 0:
            return True
        if k < 1:
            return False
        order = sorted(range(self.n), key=lambda x: (-self.degrees[x], x))
        color = [-1] * self.n

        def assign(position: int, used: int) -> bool:
            if position == self.n:
                return True
            x = order[position]
            for c in range(min(used + 1, k)):
                if all(color[y] != c for y in iter_bits(self.rows[x])):
                    color[x] = c
                    if assign(position + 1, max(used, c + 1)):
                        return True
                    color[x] = -1
            return False

        return assign(0, 0)

    def to_dict(self) -> dict:
        """JSON representation of the graph"""
        return dict(n=self.n, edges=[list(e) for e in self.edges])


class Cut:
    """
    Ordered partition ``(A_1, ..., A_k)`` of the vertices ``0..n-1``

    ``A_1`` is distinguished; as an ``(r-1)``-partition the implied
    clique order is ``r = k + 1``

    Attributes
    ----------
    parts: tuple
        sorted vertex tuples of each block
    """

    def __init__(self, parts):
        self.parts = tuple(tuple(sorted(int(x) for x in A)) for A in parts)
        if len(self.parts) < 1:
            raise ValueError("Cuts need at least one block")
        vertices = sorted(x for A in self.parts for x in A)
        if vertices != list(range(len(vertices))):
            raise ValueError(f"Blocks do not partition 0..n-1: {self.parts}")

    @classmethod
    def from_labels(cls, labels, k: int | None = None):
        """
        Create a cut from the block index of each vertex

        Parameters
        ----------
        labels: list or np.ndarray
            block index of each vertex
        k: int or None, default None
            number of blocks (default: largest label plus one)
        """
        labels = [int(b) for b in labels]
        if k is None:
            k = max(labels) + 1
        parts = [[] for _ in range(k)]
        for x, b in enumerate(labels):
            parts[b].append(x)
        return cls(parts)

    @property
    def n(self) -> int:
        """Number of vertices"""
        return sum(len(A) for A in self.parts)

    @property
    def k(self) -> int:
        """Number of blocks"""
        return len(self.parts)

    @property
    def r(self) -> int:
        """Clique order of an ``(r-1)``-partition"""
        return len(self.parts) + 1

    @reify
    def labels(self) -> np.ndarray:
        """Block index of each vertex"""
        labels = np.zeros(self.n, dtype=int)
        for b, A in enumerate(self.parts):
            labels[list(A)] = b
        return labels

    @reify
    def masks(self) -> tuple:
        """Vertex bitset of each block"""
        return tuple(vertex_mask(A) for A in self.parts)

    def block(self, x: int) -> int:
        """Block index of a vertex"""
        return int(self.labels[x])

    def is_cross(self, u: int, v: int) -> bool:
        """Check if a pair lies in the exterior of the cut"""
        return self.labels[u] != self.labels[v]

    def check(self, n: int):
        """Raise if the cut is not a partition of ``0..n-1``"""
        if self.n != n:
            raise ValueError(f"Cut covers {self.n} vertices, graph has {n}")

    def canonical(self) -> tuple:
        """Unordered partition as a sorted tuple of nonempty blocks"""
        return tuple(sorted(A for A in self.parts if A))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cut):
            return NotImplemented
        return self.parts == other.parts

    def __lt__(self, other) -> bool:
        return self.parts < other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Cut({[list(A) for A in self.parts]})"

    def to_list(self) -> list:
        return [list(A) for A in self.parts]


# PURPOSE: number of edges of the Turán graph T(n, r-1)
def turan_number(n: int, r: int) -> int:
    """
    Edges of the balanced complete ``(r-1)``-partite graph on ``n``
    vertices, the largest ``K_r``-free graph

    Parameters
    ----------
    n: int
        number of vertices
    r: int
        clique order
    """
    return turan_graph(n, r).edge_count


def turan_graph(n: int, r: int) -> Graph:
    """Balanced complete ``(r-1)``-partite graph on ``n`` vertices"""
    if r < 2:
        raise ValueError(f"Clique order must be at least 2: {r}")
    k = min(r - 1, n)
    sizes = [n // k + (1 if i < n % k else 0) for i in range(k)]
    return Graph.complete_multipartite(sizes)
