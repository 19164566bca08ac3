#!/usr/bin/env python
"""
solvers.py
Written by Tyler Sutterley (02/2026)
Exact solvers for the largest K_r-free subgraph t_r(G) and the largest
(r-1)-partite subgraph b_r(G) of a graph

    t_r(G): branch-and-bound minimum hitting set over the K_r copies of G
        with a greedy disjoint-copy packing lower bound, seeded by the
        edges inside a greedy (r-1)-cut and stopped at the Turán bound
    b_r(G): branch-and-bound over vertex assignments in degree order
        with symmetry breaking and partial upper bounds

Brute-force oracles over edge subsets and vertex partitions are
provided for validation on small graphs, and an integer program over
the K_r copies validates t_r(G) on graphs with too many edges for
subset scans

PYTHON DEPENDENCIES:
    numpy: Scientific Computing Tools For Python
        https://numpy.org
        https://numpy.org/doc/stable/user/numpy-for-matlab-users.html
    scipy: Scientific Tools for Python
        https://docs.scipy.org/doc/

UPDATE HISTORY:
    Updated 05/2026: integer program oracle for t_r
        evaluate partite assignments in chunks
    Updated 04/2026: seed the hitting set search from a greedy cut
    Updated 03/2026: enumerate all optima of both formulations
    Written 02/2026
"""

from __future__ import annotations

import logging
import itertools
import dataclasses
import numpy as np
import scipy.optimize
from xTuran.graph import Graph, Cut, turan_number
from xTuran.utilities import popcount, iter_bits

__all__ = [
    "SolveResult",
    "TuranGap",
    "kr_copies",
    "max_kr_free",
    "maximum_kr_free_subgraphs",
    "max_partite",
    "all_max_partitions",
    "turan_gap",
    "all_max_kr_free_partite",
    "brute_max_kr_free",
    "brute_max_partite",
    "ilp_max_kr_free",
]


@dataclasses.dataclass
class SolveResult:
    """
    Result of an extremal solver

    Attributes
    ----------
    value: int
        ``t_r(G)`` or ``b_r(G)``
    witness_edges: tuple or None
        edges of a largest ``K_r``-free subgraph
    witness_cut: Cut or None
        cut achieving the largest partite subgraph
    optimal: bool
        value is exact
    nodes_explored: int
        number of search nodes visited
    time_budget_hit: bool
        the node budget was exhausted
    """

    value: int
    witness_edges: tuple | None = None
    witness_cut: Cut | None = None
    optimal: bool = True
    nodes_explored: int = 0
    time_budget_hit: bool = False

    @property
    def witness(self):
        """Witness edge set or cut"""
        if self.witness_edges is None:
            return self.witness_cut
        return self.witness_edges

    def to_dict(self) -> dict:
        """JSON representation of the result"""
        d = dict(value=self.value, optimal=self.optimal)
        if self.witness_edges is not None:
            d["witness_edges"] = [list(e) for e in self.witness_edges]
        if self.witness_cut is not None:
            d["witness_parts"] = self.witness_cut.to_list()
        d["nodes"] = self.nodes_explored
        return d


@dataclasses.dataclass
class TuranGap:
    """
    Comparison of ``t_r(G)`` and ``b_r(G)``

    Attributes
    ----------
    t: int
        largest ``K_r``-free subgraph size
    b: int
        largest ``(r-1)``-partite subgraph size
    gap: int or None
        ``t - b`` when both values are exact
    kr_free: SolveResult
        solver result for ``t_r``
    partite: SolveResult
        solver result for ``b_r``
    """

    t: int
    b: int
    gap: int | None
    kr_free: SolveResult
    partite: SolveResult

    @property
    def optimal(self) -> bool:
        return self.gap is not None

    def __iter__(self):
        return iter((self.t, self.b, self.gap))


# PURPOSE: enumerate K_r copies as bitsets over edge indices
def kr_copies(G: Graph, r: int) -> list:
    """
    Copies of ``K_r`` in a graph as bitsets over ``G.edges`` indices

    Parameters
    ----------
    G: Graph
        host graph
    r: int
        clique order

    Returns
    -------
    copies: list
        edge-index bitset of each copy in lexicographic vertex order
    """
    index = {e: i for i, e in enumerate(G.edges)}
    copies = []
    for clique in G.cliques(r):
        mask = 0
        for u, v in itertools.combinations(clique, 2):
            mask |= 1 << index[(u, v)]
        copies.append(mask)
    return copies


class _HittingSet:
    """Branch-and-bound for minimum edge sets meeting every K_r copy"""

    def __init__(
        self, copies: list, budget: int | None, exhaustive: bool, lower=0
    ):
        self.copies = copies
        self.budget = budget
        self.exhaustive = exhaustive
        self.lower = lower
        self.nodes = 0
        self.hit = False
        self.best, self.best_size = self._greedy()
        self.solutions = []

    def _greedy(self):
        chosen = 0
        remaining = list(self.copies)
        while remaining:
            counts = {}
            for c in remaining:
                for e in iter_bits(c):
                    counts[e] = counts.get(e, 0) + 1
            e = min(counts, key=lambda i: (-counts[i], i))
            chosen |= 1 << e
            remaining = [c for c in remaining if not (c >> e) & 1]
        return chosen, popcount(chosen)

    def offer(self, mask: int):
        """Replace the incumbent by a smaller hitting set"""
        if popcount(mask) < self.best_size:
            self.best, self.best_size = mask, popcount(mask)

    def solve(self):
        if self.exhaustive or (self.best_size > self.lower):
            self._branch(0, 0, 0)
        if not self.exhaustive:
            self.solutions = [self.best]
        self.solutions.sort(key=lambda mask: sorted(iter_bits(mask)))
        return self

    def _branch(self, chosen: int, forbidden: int, size: int):
        self.nodes += 1
        if (self.best_size <= self.lower) and not self.exhaustive:
            return
        if (self.budget is not None) and (self.nodes > self.budget):
            self.hit = True
            return
        unhit = [c for c in self.copies if not c & chosen]
        if not unhit:
            if size < self.best_size:
                self.best, self.best_size = chosen, size
                self.solutions = [chosen]
            elif self.exhaustive and (size == self.best_size):
                self.solutions.append(chosen)
            return
        # disjoint packing of unhit copies over the allowed edges
        used, packing = 0, 0
        pivot = None
        for c in unhit:
            allowed = c & ~forbidden
            if not allowed:
                return
            if not allowed & used:
                used |= allowed
                packing += 1
            if (pivot is None) or (popcount(allowed) < popcount(pivot)):
                pivot = allowed
        bound = size + packing
        if (bound > self.best_size) or (
            (bound == self.best_size) and not self.exhaustive
        ):
            return
        # branch on the first edge of the pivot copy that is removed
        tried = 0
        for e in iter_bits(pivot):
            self._branch(chosen | (1 << e), forbidden | tried, size + 1)
            tried |= 1 << e
            if self.hit:
                return


def _check_order(r: int):
    if r < 3:
        raise ValueError(f"Clique order must be at least 3: {r}")


def _internal_mask(G: Graph, labels: list) -> int:
    # edge-index bitset of the edges inside the blocks of a labeling
    mask = 0
    for i, (u, v) in enumerate(G.edges):
        if labels[u] == labels[v]:
            mask |= 1 << i
    return mask


# PURPOSE: largest K_r-free subgraph
def max_kr_free(
    G: Graph, r: int, budget: int | None = None, turan_bound: bool = True
) -> SolveResult:
    """
    Largest ``K_r``-free subgraph ``t_r(G)``

    Parameters
    ----------
    G: Graph
        host graph
    r: int
        clique order
    budget: int or None, default None
        maximum number of search nodes
    turan_bound: bool, default True
        stop once the removed edges reach ``|G| - t(n, r)`` with
        ``t(n, r)`` the edges of the Turán graph

    Returns
    -------
    result: SolveResult
        value and witness edges
    """
    _check_order(r)
    copies = kr_copies(G, r)
    lower = 0
    if turan_bound and copies:
        lower = G.edge_count - turan_number(G.n, r)
    search = _HittingSet(copies, budget, exhaustive=False, lower=lower)
    if turan_bound and copies:
        # edges inside the blocks of a greedy (r-1)-cut meet every K_r
        greedy = _Partition(G, r - 1, G.n + 1, exhaustive=False).solve()
        if greedy.best is not None:
            search.offer(_internal_mask(G, greedy.best))
    search.solve()
    witness = tuple(
        e for i, e in enumerate(G.edges) if not (search.best >> i) & 1
    )
    result = SolveResult(
        value=G.edge_count - search.best_size,
        witness_edges=witness,
        optimal=not search.hit,
        nodes_explored=search.nodes,
        time_budget_hit=search.hit,
    )
    assert len(witness) == result.value, "witness size mismatch"
    assert G.edge_subgraph(witness).is_kr_free(r), "witness contains K_r"
    if search.hit:
        logging.debug(f"t_{r} budget of {budget} nodes exhausted")
    return result


# PURPOSE: all largest K_r-free subgraphs
def maximum_kr_free_subgraphs(G: Graph, r: int, limit: int = 40) -> list:
    """
    Enumerate every largest ``K_r``-free subgraph

    Parameters
    ----------
    G: Graph
        host graph
    r: int
        clique order
    limit: int, default 40
        maximum number of edges of ``G``

    Returns
    -------
    subgraphs: list
        largest ``K_r``-free subgraphs in canonical order
    """
    _check_order(r)
    if G.edge_count > limit:
        raise ValueError(f"Graph has {G.edge_count} edges (limit {limit})")
    copies = kr_copies(G, r)
    search = _HittingSet(copies, None, exhaustive=True).solve()
    subgraphs = []
    for mask in search.solutions:
        edges = [e for i, e in enumerate(G.edges) if not (mask >> i) & 1]
        subgraphs.append(G.edge_subgraph(edges))
    return subgraphs


class _Partition:
    """Branch-and-bound over vertex assignments to k blocks"""

    def __init__(self, G: Graph, k: int, budget, exhaustive: bool):
        self.G = G
        self.k = k
        self.budget = budget
        self.exhaustive = exhaustive
        self.order = sorted(range(G.n), key=lambda x: (-G.degrees[x], x))
        # edges with both endpoints at or after each position
        self.remaining = [0] * (G.n + 1)
        later = 0
        for position in range(G.n - 1, -1, -1):
            x = self.order[position]
            self.remaining[position] = self.remaining[position + 1]
            self.remaining[position] += popcount(G.rows[x] & later)
            later |= 1 << x
        self.labels = [-1] * G.n
        self.blocks = [0] * k
        self.nodes = 0
        self.hit = False
        self.best_value = -1
        self.best = None
        self.solutions = []

    def solve(self):
        self._branch(0, 0, 0, 0)
        return self

    def _bound(self, position: int, assigned: int, value: int) -> int:
        bound = value + self.remaining[position]
        for x in self.order[position:]:
            row = self.G.rows[x]
            to_assigned = popcount(row & assigned)
            inside = min(popcount(row & block) for block in self.blocks)
            bound += to_assigned - inside
        return bound

    def _branch(self, position: int, assigned: int, used: int, value: int):
        self.nodes += 1
        if (self.budget is not None) and (self.nodes > self.budget):
            self.hit = True
            return
        if position == self.G.n:
            if value > self.best_value:
                self.best_value = value
                self.best = list(self.labels)
                self.solutions = [list(self.labels)]
            elif self.exhaustive and (value == self.best_value):
                self.solutions.append(list(self.labels))
            return
        bound = self._bound(position, assigned, value)
        if (bound < self.best_value) or (
            (bound == self.best_value) and not self.exhaustive
        ):
            return
        x = self.order[position]
        row = self.G.rows[x]
        to_assigned = popcount(row & assigned)
        # new blocks only in order of first use
        choices = range(min(used + 1, self.k))
        gains = [to_assigned - popcount(row & self.blocks[b]) for b in choices]
        for b in sorted(choices, key=lambda b: (-gains[b], b)):
            self.labels[x] = b
            self.blocks[b] |= 1 << x
            self._branch(
                position + 1, assigned | (1 << x), max(used, b + 1),
                value + gains[b],
            )
            self.blocks[b] &= ~(1 << x)
            self.labels[x] = -1
            if self.hit:
                return


def _check_parts(k: int):
    if k < 1:
        raise ValueError(f"Number of parts must be at least 1: {k}")


# PURPOSE: largest k-partite subgraph
def max_partite(G: Graph, k: int, budget: int | None = None) -> SolveResult:
    """
    Largest ``k``-partite subgraph, the maximum ``k``-cut of ``G``

    Call with ``k = r - 1`` for ``b_r(G)``

    Parameters
    ----------
    G: Graph
        host graph
    k: int
        number of parts
    budget: int or None, default None
        maximum number of search nodes

    Returns
    -------
    result: SolveResult
        value and witness cut
    """
    _check_parts(k)
    search = _Partition(G, k, budget, exhaustive=False).solve()
    if search.best is None:
        # budget exhausted before any complete assignment
        search.best = [0] * G.n
        search.best_value = 0
    witness = Cut.from_labels(search.best, k=k)
    value = G.edge_count - sum(G.induced_edge_count(A) for A in witness.parts)
    assert value == search.best_value, "witness cut size mismatch"
    if not search.hit:
        assert k * value >= (k - 1) * G.edge_count, "cut below (k-1)|G|/k"
    else:
        logging.debug(f"{k}-cut budget of {budget} nodes exhausted")
    return SolveResult(
        value=value,
        witness_cut=witness,
        optimal=not search.hit,
        nodes_explored=search.nodes,
        time_budget_hit=search.hit,
    )


# PURPOSE: all maximum k-cuts
def all_max_partitions(G: Graph, k: int) -> list:
    """
    Enumerate all maximum ``k``-cuts up to relabeling of blocks

    Parameters
    ----------
    G: Graph
        host graph
    k: int
        number of parts

    Returns
    -------
    cuts: list
        maximum cuts with blocks labeled in order of first use
    """
    _check_parts(k)
    search = _Partition(G, k, None, exhaustive=True).solve()
    cuts = sorted(Cut.from_labels(labels, k=k) for labels in search.solutions)
    return cuts


# PURPOSE: compare the largest K_r-free and (r-1)-partite subgraphs
def turan_gap(G: Graph, r: int, budget: int | None = None) -> TuranGap:
    """
    Compute ``t_r(G)``, ``b_r(G)`` and their difference

    Parameters
    ----------
    G: Graph
        host graph
    r: int
        clique order
    budget: int or None, default None
        maximum number of search nodes for each solver

    Returns
    -------
    result: TuranGap
        both values and the gap when both are exact
    """
    _check_order(r)
    t = max_kr_free(G, r, budget=budget)
    b = max_partite(G, r - 1, budget=budget)
    gap = None
    if t.optimal and b.optimal:
        gap = t.value - b.value
        assert gap >= 0, f"t_{r}(G)={t.value} below b_{r}(G)={b.value}"
        assert (r - 1) * b.value >= (r - 2) * G.edge_count, (
            f"b_{r}(G)={b.value} below (r-2)|G|/(r-1)"
        )
    return TuranGap(t=t.value, b=b.value, gap=gap, kr_free=t, partite=b)


# PURPOSE: check that every largest K_r-free subgraph is (r-1)-partite
def all_max_kr_free_partite(G: Graph, r: int, limit: int = 40) -> bool:
    """
    Check if every largest ``K_r``-free subgraph is ``(r-1)``-partite

    Parameters
    ----------
    G: Graph
        host graph
    r: int
        clique order
    limit: int, default 40
        maximum number of edges of ``G``
    """
    subgraphs = maximum_kr_free_subgraphs(G, r, limit=limit)
    return all(F.is_k_partite(r - 1) for F in subgraphs)


# PURPOSE: largest K_r-free subgraph by exhaustive search
def brute_max_kr_free(G: Graph, r: int, limit: int = 5_000_000) -> SolveResult:
    """
    Largest ``K_r``-free subgraph by scanning edge subsets of
    increasing size that meet every ``K_r`` copy

    Parameters
    ----------
    G: Graph
        host graph
    r: int
        clique order
    limit: int, default 5000000
        maximum number of subsets to scan
    """
    _check_order(r)
    copies = kr_copies(G, r)
    # only edges lying in some copy can be useful to remove
    candidates = sorted(set(i for c in copies for i in iter_bits(c)))
    scanned = 0
    for size in range(len(candidates) + 1):
        for removed in itertools.combinations(candidates, size):
            scanned += 1
            if scanned > limit:
                raise ValueError(f"Exhaustive search exceeds {limit} subsets")
            mask = sum(1 << i for i in removed)
            if all(c & mask for c in copies):
                witness = tuple(
                    e for i, e in enumerate(G.edges) if not (mask >> i) & 1
                )
                return SolveResult(
                    value=G.edge_count - size,
                    witness_edges=witness,
                    nodes_explored=scanned,
                )
    raise RuntimeError("Exhaustive search failed")


# PURPOSE: largest k-partite subgraph by exhaustive search
def brute_max_partite(
    G: Graph, k: int, limit: int = 5_000_000, chunk: int = 65536
) -> SolveResult:
    """
    Maximum ``k``-cut by evaluating every assignment of vertices
    ``1..n-1`` with vertex 0 in the first block

    Parameters
    ----------
    G: Graph
        host graph
    k: int
        number of parts
    limit: int, default 5000000
        maximum number of assignments
    chunk: int, default 65536
        number of assignments evaluated at once
    """
    _check_parts(k)
    count = k ** (G.n - 1)
    if count > limit:
        raise ValueError(f"Exhaustive search exceeds {limit} assignments")
    edges = np.array(G.edges, dtype=int).reshape(-1, 2)
    u, v = edges[:, 0], edges[:, 1]
    # mixed radix digits of vertices 1..n-1, vertex 0 fixed to part 0
    radix = k ** np.arange(G.n - 2, -1, -1, dtype=np.int64)
    best_value, best_labels = -1, None
    for start in range(0, count, chunk):
        index = np.arange(start, min(start + chunk, count), dtype=np.int64)
        labels = np.zeros((len(index), G.n), dtype=np.int8)
        labels[:, 1:] = (index[:, None] // radix) % k
        values = np.count_nonzero(labels[:, u] != labels[:, v], axis=1)
        i = int(np.argmax(values))
        if values[i] > best_value:
            best_value, best_labels = int(values[i]), labels[i].copy()
    return SolveResult(
        value=best_value,
        witness_cut=Cut.from_labels(best_labels, k=k),
        nodes_explored=count,
    )


# PURPOSE: largest K_r-free subgraph as an integer program
def ilp_max_kr_free(G: Graph, r: int) -> SolveResult:
    """
    Largest ``K_r``-free subgraph from a minimum hitting set of the
    ``K_r`` copies solved as a binary integer program with ``HiGHS``

    Parameters
    ----------
    G: Graph
        host graph
    r: int
        clique order
    """
    _check_order(r)
    copies = kr_copies(G, r)
    if not copies:
        return SolveResult(value=G.edge_count, witness_edges=tuple(G.edges))
    # one row per copy, one column per edge
    A = np.zeros((len(copies), G.edge_count))
    for row, c in enumerate(copies):
        A[row, list(iter_bits(c))] = 1.0
    res = scipy.optimize.milp(
        np.ones(G.edge_count),
        integrality=np.ones(G.edge_count),
        bounds=scipy.optimize.Bounds(0, 1),
        constraints=scipy.optimize.LinearConstraint(A, lb=1, ub=np.inf),
    )
    if not res.success:
        raise RuntimeError(f"Integer program failed: {res.message}")
    removed = np.round(res.x).astype(bool)
    logging.debug(f"ILP hitting set of {int(removed.sum())} edges")
    witness = tuple(e for i, e in enumerate(G.edges) if not removed[i])
    return SolveResult(
        value=len(witness),
        witness_edges=witness,
        nodes_explored=len(copies),
    )
