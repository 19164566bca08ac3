#!/usr/bin/env python
"""
rooted.py
Written by Tyler Sutterley (02/2026)
Rooted pattern graphs: density, balance, rooted copy counts and
expectation profiles of copy counts in G(n,p)

A rooted graph H has an ordered sequence of distinct roots. Only the
edges E'(H) not inside the roots are counted:
    v_H = |V(H) \\ R|, e_H = |E'(H)|, rho(H) = e_H/v_H
H is balanced if rho(H') <= rho(H) for every subgraph H' with the same
roots, and strictly balanced if the inequality is strict whenever
E'(H') != E'(H)

Text form of a rooted graph: "vertices ; roots ; edges"
    0 1 2 ; 0 ; 0-1 0-2 1-2

UPDATE HISTORY:
    Updated 03/2026: added the minimum density slack over subgraphs
    Written 02/2026
"""

from __future__ import annotations

import logging
import itertools
import dataclasses
from fractions import Fraction
from scipy.special import comb
from xTuran.graph import Graph
from xTuran.utilities import falling_factorial, iter_bits

__all__ = [
    "RootedGraph",
    "ExpectationProfile",
    "density",
    "is_balanced",
    "is_strictly_balanced",
    "balance_gap",
    "count_copies",
    "expectation_profile",
    "audit_balanced_profile",
    "varsigma",
    "h_ij",
    "h_ij_subgraph",
    "h_ij_density",
    "s_ij",
]


class RootedGraph:
    """
    Small graph with an ordered sequence of distinct roots

    Parameters
    ----------
    vertices: iterable
        vertex labels (integers)
    edges: iterable
        vertex pairs ``(u, v)``
    roots: iterable
        ordered root sequence
    """

    def __init__(self, vertices, edges, roots):
        self.vertices = tuple(sorted(int(v) for v in vertices))
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"Repeated vertex in {self.vertices}")
        self.roots = tuple(int(v) for v in roots)
        if len(set(self.roots)) != len(self.roots):
            raise ValueError(f"Roots must be distinct: {self.roots}")
        if not set(self.roots) <= set(self.vertices):
            raise ValueError(f"Roots {self.roots} are not all vertices")
        normalized = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"Self-loop at vertex {u}")
            if (u not in self.vertices) or (v not in self.vertices):
                raise ValueError(f"Edge ({u}, {v}) outside the vertices")
            normalized.add((min(u, v), max(u, v)))
        self.edges = tuple(sorted(normalized))

    # PURPOSE: parse the "vertices ; roots ; edges" text form
    @classmethod
    def from_text(cls, text: str):
        """
        Read a rooted graph from ``"vertices ; roots ; edges"``

        Vertices and roots are separated by spaces or commas and edges
        are written ``u-v``
        """
        fields = text.split(";")
        if len(fields) != 3:
            raise ValueError(f"Expected 'vertices ; roots ; edges': {text!r}")

        def tokens(field: str) -> list:
            return field.replace(",", " ").split()

        try:
            vertices = [int(v) for v in tokens(fields[0])]
            roots = [int(v) for v in tokens(fields[1])]
            edges = [
                tuple(int(v) for v in e.split("-")) for e in tokens(fields[2])
            ]
        except ValueError as exc:
            raise ValueError(f"Invalid rooted graph {text!r}: {exc}") from exc
        if any(len(e) != 2 for e in edges):
            raise ValueError(f"Edges must be written u-v: {text!r}")
        return cls(vertices, edges, roots)

    def to_text(self) -> str:
        vertices = " ".join(str(v) for v in self.vertices)
        roots = " ".join(str(v) for v in self.roots)
        edges = " ".join(f"{u}-{v}" for u, v in self.edges)
        return f"{vertices} ; {roots} ; {edges}"

    @property
    def non_roots(self) -> tuple:
        """Vertices that are not roots"""
        return tuple(v for v in self.vertices if v not in self.roots)

    @property
    def inner_edges(self) -> tuple:
        """Edges ``E'(H)`` not joining two roots"""
        R = set(self.roots)
        return tuple(e for e in self.edges if not set(e) <= R)

    @property
    def v_H(self) -> int:
        return len(self.vertices) - len(self.roots)

    @property
    def e_H(self) -> int:
        return len(self.inner_edges)

    def induced(self, vertices):
        """Subgraph induced by the roots and a set of non-root vertices"""
        W = set(int(v) for v in vertices) | set(self.roots)
        edges = [e for e in self.edges if set(e) <= W]
        return RootedGraph(W, edges, self.roots)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RootedGraph):
            return NotImplemented
        return (self.vertices, self.roots, self.edges) == (
            other.vertices,
            other.roots,
            other.edges,
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.roots, self.edges))

    def __repr__(self) -> str:
        return f"RootedGraph({self.to_text()!r})"


@dataclasses.dataclass
class ExpectationProfile:
    """
    Expected rooted copy counts in ``G(n,p)``

    Attributes
    ----------
    E0: float
        scale ``n^(v_H) p^(e_H)``
    E0_exact: float
        ``(n-s)_(v_H) p^(e_H)`` for ``s`` roots
    EL: dict
        for each rooted shape of ``L`` with ``e_L < e_H``: ``v_L``,
        ``e_L`` and the bound ``(v_H)_(v_L) n^(v_H-v_L) p^(e_H-e_L)``
    """

    E0: float
    E0_exact: float
    EL: dict

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)


def _check_size(H: RootedGraph, limit: int = 12):
    if len(H.vertices) > limit:
        raise ValueError(f"Patterns are limited to {limit} vertices")


def density(H: RootedGraph) -> Fraction:
    """Exact density ``rho(H) = e_H/v_H``"""
    if H.v_H == 0:
        raise ValueError("Density is undefined without non-root vertices")
    return Fraction(H.e_H, H.v_H)


def _proper_densities(H: RootedGraph):
    # densities of subgraphs induced by proper nonempty non-root subsets
    W = H.non_roots
    for size in range(1, len(W)):
        for subset in itertools.combinations(W, size):
            yield density(H.induced(subset))


# PURPOSE: check that no subgraph is denser than the pattern
def is_balanced(H: RootedGraph) -> bool:
    """
    Check ``rho(H') <= rho(H)`` for every subgraph with the same roots

    Induced subgraphs are the densest for a given vertex set so the
    scan runs over subsets of the non-root vertices
    """
    _check_size(H)
    rho = density(H)
    return all(d <= rho for d in _proper_densities(H))


def is_strictly_balanced(H: RootedGraph) -> bool:
    """
    Check ``rho(H') < rho(H)`` for every subgraph with the same roots
    and ``E'(H') != E'(H)``
    """
    _check_size(H)
    rho = density(H)
    return all(d < rho for d in _proper_densities(H))


def balance_gap(H: RootedGraph) -> Fraction | None:
    """
    Minimum density slack ``rho(H) - rho(H')`` over subgraphs
    ``H'`` with the same roots and ``E'(H') != E'(H)``

    Returns ``None`` when there are no such subgraphs
    """
    _check_size(H)
    rho = density(H)
    slack = [rho - d for d in _proper_densities(H)]
    if H.e_H > 0:
        # dropping a single edge from the full vertex set
        slack.append(Fraction(1, H.v_H))
    return min(slack) if slack else None


# PURPOSE: count rooted copies of a pattern at fixed anchors
def count_copies(H: RootedGraph, G: Graph, anchors) -> int:
    """
    Number of injections of ``H`` into ``G`` sending the roots to the
    anchors and every edge of ``E'(H)`` to an edge of ``G``

    Repeated anchors give 0

    Parameters
    ----------
    H: RootedGraph
        pattern
    G: Graph
        host graph
    anchors: tuple
        images of the roots
    """
    anchors = tuple(int(x) for x in anchors)
    if len(anchors) != len(H.roots):
        raise ValueError(
            f"Expected {len(H.roots)} anchors, received {len(anchors)}"
        )
    if any(not (0 <= x < G.n) for x in anchors):
        raise ValueError(f"Anchors outside 0..{G.n - 1}: {anchors}")
    if len(set(anchors)) != len(anchors):
        return 0
    order = H.non_roots
    mapped = dict(zip(H.roots, anchors))
    # pattern neighbors of each non-root vertex placed before it
    inner = set(H.inner_edges)
    earlier = {}
    placed = set(H.roots)
    for u in order:
        earlier[u] = [w for w in placed if (min(u, w), max(u, w)) in inner]
        placed.add(u)
    full = (1 << G.n) - 1

    def extend(position: int, used: int) -> int:
        if position == len(order):
            return 1
        u = order[position]
        candidates = full & ~used
        for w in earlier[u]:
            candidates &= G.rows[mapped[w]]
        total = 0
        for x in iter_bits(candidates):
            mapped[u] = x
            total += extend(position + 1, used | (1 << x))
        mapped.pop(u, None)
        return total

    used = sum(1 << x for x in anchors)
    return extend(0, used)


def _shape(H: RootedGraph, edges: tuple) -> tuple:
    # canonical form of the rooted graph spanned by a set of edges
    R = {v: f"r{i}" for i, v in enumerate(H.roots)}
    free = sorted(set(v for e in edges for v in e if v not in R))
    best = None
    for perm in itertools.permutations(range(len(free))):
        label = dict(R)
        label.update({v: str(perm[i]) for i, v in enumerate(free)})
        form = tuple(
            sorted(tuple(sorted((label[u], label[v]))) for u, v in edges)
        )
        if best is None or form < best:
            best = form
    return (len(free), len(edges), best or ())


# PURPOSE: expectations of the copy count polynomial
def expectation_profile(
    H: RootedGraph, n: int, p: float, **kwargs
) -> ExpectationProfile:
    """
    ``E0`` and the ``EL`` bounds for the rooted copy count of ``H``

    Parameters
    ----------
    H: RootedGraph
        pattern
    n: int
        number of vertices
    p: float
        edge probability
    limit: int, default 16
        largest number of pattern edges for the shape scan

    Returns
    -------
    profile: ExpectationProfile
        expectation and bounds by rooted shape of ``L``
    """
    kwargs.setdefault("limit", 16)
    _check_size(H)
    if H.e_H > kwargs["limit"]:
        raise ValueError(f"Shape scan is limited to {kwargs['limit']} edges")
    v, e, s = H.v_H, H.e_H, len(H.roots)
    E0 = float(n) ** v * float(p) ** e
    E0_exact = float(falling_factorial(n - s, v)) * float(p) ** e
    EL = {}
    inner = H.inner_edges
    for size in range(e):
        for edges in itertools.combinations(inner, size):
            vL, eL, form = _shape(H, edges)
            key = " ".join("-".join(pair) for pair in form)
            if key in EL:
                continue
            bound = (
                falling_factorial(v, vL)
                * float(n) ** (v - vL)
                * float(p) ** (e - eL)
            )
            EL[key] = dict(v_L=vL, e_L=eL, bound=bound)
    logging.debug(f"{len(EL)} rooted shapes for {H!r}")
    return ExpectationProfile(E0=E0, E0_exact=E0_exact, EL=EL)


def audit_balanced_profile(
    H: RootedGraph, n: int, p: float, tolerance: float = 1e-12
) -> list:
    """
    Shapes of a balanced pattern whose ``EL`` bound exceeds
    ``(v_H)_(v_L) (n^(v_H) p^(e_H))^(1 - e_L/e_H)``

    Returns
    -------
    violations: list
        shape keys failing the comparison (empty for balanced ``H``)
    """
    profile = expectation_profile(H, n, p)
    violations = []
    for key, L in profile.EL.items():
        z = falling_factorial(H.v_H, L["v_L"])
        reference = z * profile.E0 ** (1.0 - L["e_L"] / H.e_H)
        if L["bound"] > reference * (1.0 + tolerance):
            violations.append(key)
    return violations


def varsigma(i: int, j: int) -> int:
    """Reverse lexicographic index ``C(j-1, 2) + i`` of the pair ``(i, j)``"""
    if not (1 <= i < j):
        raise ValueError(f"Need 1 <= i < j: i={i}, j={j}")
    return int(comb(j - 1, 2, exact=True)) + i


def _check_indices(r: int, i: int, j: int):
    if not (1 <= i < j <= r - 1):
        raise ValueError(f"Need 1 <= i < j <= r-1: i={i}, j={j}, r={r}")


# PURPOSE: rooted graphs of the pairs preceding (i, j)
def h_ij(r: int, i: int, j: int) -> RootedGraph:
    """
    Rooted graph ``H_ij`` on ``u_0..u_j`` with roots ``(u_0, u_i, u_j)``

    Edges are ``u_0 u_k`` for ``k`` in ``1..j`` and ``u_k u_l`` for
    pairs ``(k, l)`` preceding ``(i, j)`` in reverse lexicographic order

    Parameters
    ----------
    r: int
        clique order
    i: int
        first index
    j: int
        second index
    """
    _check_indices(r, i, j)
    edges = [(0, k) for k in range(1, j + 1)]
    for l in range(2, j + 1):
        for k in range(1, l):
            if (l < j) or (k < i):
                edges.append((k, l))
    return RootedGraph(range(j + 1), edges, (0, i, j))


def h_ij_subgraph(r: int, i: int, j: int, k: int) -> RootedGraph:
    """Subgraph ``H[k]`` of ``H_ij`` induced by ``u_0..u_k, u_i, u_j``"""
    _check_indices(r, i, j)
    if not (0 <= k < j):
        raise ValueError(f"Need 0 <= k < j: k={k}, j={j}")
    return h_ij(r, i, j).induced(range(k + 1))


def h_ij_density(i: int, j: int, k: int) -> Fraction:
    """
    Closed form of ``rho(H[k])``: ``(k+5)/2`` for ``k < i`` and
    ``(k^2+k+2i-4)/(2(k-1))`` for ``i <= k < j``
    """
    if not (1 <= k < j) or (k == i == 1):
        raise ValueError(f"H[{k}] has no non-root vertices for i={i}")
    if k < i:
        return Fraction(k + 5, 2)
    return Fraction(k**2 + k + 2 * i - 4, 2 * (k - 1))


def s_ij(n: int, p: float, i: int, j: int) -> float:
    """``S_ij = n^(j-1) p^(varsigma(i,j) + j - 1)``"""
    return float(n) ** (j - 1) * float(p) ** (varsigma(i, j) + j - 1)
