#!/usr/bin/env python
"""
cuts.py
Written by Tyler Sutterley (02/2026)
Cuts of graphs: cut sizes, defects, bad pairs and bad vertices,
families of balanced cuts, maximum cuts within a family, equivalence
components, rigidity and critical edges

    |Pi_G|: edges of G joining two distinct blocks of Pi
    phi(F, Pi) = (r-1)|F[A_1]| + |F & ext(Pi)|
    Q_G(Pi): pairs of A_1 with kappa(xy, A_2..A_{r-1}) < gamma Lambda_r
    D_Pi(x) = sum_{i<j} d_{A_i}(x) d_{A_j}(x)
    C(X): ordered balanced (r-1)-cuts with X inside A_1

PYTHON DEPENDENCIES:
    numpy: Scientific Computing Tools For Python
        https://numpy.org
        https://numpy.org/doc/stable/user/numpy-for-matlab-users.html

UPDATE HISTORY:
    Updated 03/2026: added maximality check for the edges of a cut
    Written 02/2026
"""

from __future__ import annotations

import logging
import itertools
import dataclasses
from fractions import Fraction
from xTuran.graph import Graph, Cut, vertex_mask
from xTuran.solvers import max_partite, all_max_partitions
from xTuran.counts import kappa
from xTuran.constants import lambda_r, abc
from xTuran.utilities import as_rational, popcount, iter_bits

__all__ = [
    "GLOBAL",
    "CutFamily",
    "RigidityReport",
    "cut_edges",
    "cut_graph",
    "family_max",
    "max_cuts",
    "defect",
    "phi",
    "bad_pairs",
    "d_pi",
    "bad_vertices",
    "enumerate_balanced_cuts",
    "rigidity_analysis",
    "crit",
    "crit_by_deletion",
    "cut_conjecture_stat",
    "maximal_kr_free_cut",
]

# defect relative to the largest (r-1)-partite subgraph
GLOBAL = "global"


@dataclasses.dataclass
class CutFamily:
    """
    Realized family ``C(X)`` of balanced ordered cuts

    Attributes
    ----------
    n: int
        number of vertices
    r: int
        clique order (cuts have ``r - 1`` blocks)
    delta: Fraction
        balance slack
    X: tuple
        vertices pinned inside the first block
    members: list
        cuts of the family in lexicographic order
    """

    n: int
    r: int
    delta: Fraction
    X: tuple
    members: list

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, cut) -> bool:
        return cut in self.members

    def description(self) -> dict:
        """Implicit description of the family"""
        return dict(n=self.n, r=self.r, delta=str(self.delta), X=list(self.X))

    def to_dict(self) -> dict:
        d = self.description()
        d["members"] = [cut.to_list() for cut in self.members]
        return d


@dataclasses.dataclass
class RigidityReport:
    """
    Maximum cuts of a family and the rigidity of a graph

    Attributes
    ----------
    max_value: int
        largest cut size ``b(C, G)`` over the family
    max_cuts: list
        all cuts of the family attaining ``max_value``
    equivalent_pairs: int
        pairs of vertices in the same block of every maximum cut
    rigid: bool
        ``equivalent_pairs >= (1 - alpha) n^2 / (2(r-1))``
    core: list or None
        the ``r - 1`` components larger than ``n/r``
    components: list
        equivalence classes of vertices
    threshold: Fraction
        rigidity threshold on the number of equivalent pairs
    diagnostic: str or None
        reason a rigid graph has no core
    """

    max_value: int
    max_cuts: list
    equivalent_pairs: int
    rigid: bool
    core: list | None
    components: list
    threshold: Fraction
    diagnostic: str | None = None

    def to_dict(self) -> dict:
        return dict(
            max_value=self.max_value,
            max_cuts=[cut.to_list() for cut in self.max_cuts],
            equivalent_pairs=self.equivalent_pairs,
            rigid=self.rigid,
            core=None if self.core is None else [list(C) for C in self.core],
            components=[list(C) for C in self.components],
            threshold=str(self.threshold),
            diagnostic=self.diagnostic,
        )


# PURPOSE: number of graph edges crossing a cut
def cut_edges(G: Graph, cut: Cut) -> int:
    """
    Number of edges of ``G`` with endpoints in distinct blocks

    Parameters
    ----------
    G: Graph
        host graph
    cut: Cut
        partition of the vertices of ``G``
    """
    cut.check(G.n)
    count = 0
    for mask in cut.masks:
        for x in iter_bits(mask):
            count += popcount(G.rows[x] & ~mask)
    return count // 2


def cut_graph(G: Graph, cut: Cut) -> Graph:
    """The ``(r-1)``-partite subgraph ``Pi_G`` of edges crossing a cut"""
    cut.check(G.n)
    return Graph.from_edges(G.n, [e for e in G.edges if cut.is_cross(*e)])


def _nonempty(family: CutFamily):
    if len(family) == 0:
        raise ValueError("Cut family is empty")


def family_max(G: Graph, family: CutFamily) -> int:
    """Largest cut size ``b(C, G)`` over a realized family"""
    _nonempty(family)
    return max(cut_edges(G, cut) for cut in family)


def max_cuts(G: Graph, family: CutFamily) -> tuple:
    """
    All cuts of a family attaining ``b(C, G)``

    Returns
    -------
    value: int
        largest cut size
    cuts: list
        maximizing cuts in family order
    """
    _nonempty(family)
    values = [cut_edges(G, cut) for cut in family]
    value = max(values)
    cuts = [cut for cut, v in zip(family, values) if v == value]
    return (value, cuts)


# PURPOSE: distance of a cut from the best cut
def defect(G: Graph, cut: Cut, family=GLOBAL, **kwargs) -> int:
    """
    Defect ``b - |Pi_G|`` of a cut

    Parameters
    ----------
    G: Graph
        host graph
    cut: Cut
        cut to evaluate
    family: CutFamily or str, default GLOBAL
        family of competing cuts, or ``GLOBAL`` for ``b_r(G)``
    budget: int or None, default None
        search node budget for ``b_r(G)``
    """
    kwargs.setdefault("budget", None)
    value = cut_edges(G, cut)
    if isinstance(family, str):
        if family != GLOBAL:
            raise ValueError(f"Unknown cut family {family!r}")
        result = max_partite(G, cut.k, budget=kwargs["budget"])
        if not result.optimal:
            logging.warning("b_r(G) not proven optimal, defect is a bound")
        best = result.value
    else:
        _nonempty(family)
        if cut not in family:
            raise ValueError(f"{cut} is not a member of the cut family")
        best = family_max(G, family)
    assert best >= value, f"cut of size {value} exceeds the maximum {best}"
    return best - value


# PURPOSE: weighted count of an edge set against a cut
def phi(F, cut: Cut) -> int:
    """
    ``phi(F, Pi) = (r-1)|F[A_1]| + |F & ext(Pi)|``

    Parameters
    ----------
    F: Graph or iterable
        graph or collection of edges ``(u, v)``
    cut: Cut
        ordered ``(r-1)``-cut
    """
    edges = F.edges if isinstance(F, Graph) else [tuple(e) for e in F]
    first = cut.masks[0]
    inside = exterior = 0
    for u, v in edges:
        if not (0 <= min(u, v) and max(u, v) < cut.n):
            raise ValueError(f"Edge ({u}, {v}) outside the cut vertices")
        if cut.is_cross(u, v):
            exterior += 1
        elif (first >> u) & 1:
            inside += 1
    return (cut.r - 1) * inside + exterior


# PURPOSE: pairs of the first block with few K_r^- completions
def bad_pairs(G: Graph, cut: Cut, gamma, p) -> list:
    """
    Pairs ``{x, y}`` of ``A_1`` that are bad for ``(A_2..A_{r-1})``

    Adjacency of ``x`` and ``y`` is not required

    Parameters
    ----------
    G: Graph
        host graph
    cut: Cut
        ordered ``(r-1)``-cut
    gamma: float or Fraction
        bad-pair constant
    p: float or Fraction
        edge probability of the scale ``Lambda_r``

    Returns
    -------
    Q: list
        sorted pairs with ``kappa(xy, A_2..A_{r-1}) < gamma Lambda_r``
    """
    cut.check(G.n)
    gamma = as_rational(gamma)
    if gamma <= 0:
        raise ValueError(f"gamma must be positive: {gamma}")
    r = cut.r
    threshold = gamma * lambda_r(G.n, p, r, exact=True)
    others = [list(A) for A in cut.parts[1:]]
    Q = []
    for xy in itertools.combinations(cut.parts[0], 2):
        if kappa(G, r, [xy, *others]) < threshold:
            Q.append(xy)
    return Q


# PURPOSE: products of the degrees of a vertex into distinct blocks
def d_pi(G: Graph, cut: Cut, x: int) -> int:
    """
    ``D_Pi(x) = sum_{i<j} d_{A_i}(x) d_{A_j}(x)``

    Parameters
    ----------
    G: Graph
        host graph
    cut: Cut
        ordered cut
    x: int
        vertex
    """
    cut.check(G.n)
    if not (0 <= x < G.n):
        raise ValueError(f"Vertex {x} outside 0..{G.n - 1}")
    degrees = [popcount(G.rows[x] & mask) for mask in cut.masks]
    return sum(a * b for a, b in itertools.combinations(degrees, 2))


def bad_vertices(G: Graph, cut: Cut, p, r: int | None = None) -> list:
    """
    Vertices ``x`` of ``A_1`` with ``D_Pi(x) < c_r n^2 p^2``

    Parameters
    ----------
    G: Graph
        host graph
    cut: Cut
        ordered ``(r-1)``-cut
    p: float or Fraction
        edge probability
    r: int or None, default None
        clique order (default: implied by the cut)
    """
    if r is None:
        r = cut.r
    elif r != cut.r:
        raise ValueError(f"Cut has {cut.k} blocks, r={r} needs {r - 1}")
    p = as_rational(p)
    if p <= 0:
        raise ValueError(f"Edge probability must be positive: {p}")
    c = abc(r)[2]
    threshold = c * G.n**2 * p**2
    return [x for x in cut.parts[0] if d_pi(G, cut, x) < threshold]


# PURPOSE: realize the family of balanced cuts with X inside A_1
def enumerate_balanced_cuts(
    n: int, r: int, delta, X=(), limit: int = 14
) -> CutFamily:
    """
    Ordered ``(r-1)``-cuts whose blocks all have size strictly between
    ``(1-delta)n/(r-1)`` and ``(1+delta)n/(r-1)`` with ``X`` inside
    the first block

    Parameters
    ----------
    n: int
        number of vertices
    r: int
        clique order
    delta: float or Fraction
        balance slack
    X: iterable, default ()
        vertices pinned inside the first block
    limit: int, default 14
        largest number of vertices to realize

    Returns
    -------
    family: CutFamily
        cuts in lexicographic order of their block lists
    """
    if n > limit:
        raise ValueError(f"Cut families are realized for n <= {limit}: {n}")
    if r < 3:
        raise ValueError(f"Clique order must be at least 3: {r}")
    delta = as_rational(delta)
    X = tuple(sorted(set(int(x) for x in X)))
    if any(not (0 <= x < n) for x in X):
        raise ValueError(f"Pinned vertices outside 0..{n - 1}: {X}")
    k = r - 1
    lower = (1 - delta) * Fraction(n, k)
    upper = (1 + delta) * Fraction(n, k)
    sizes = [s for s in range(n + 1) if lower < s < upper]
    members = []
    if sizes and len(X) <= sizes[-1]:
        free = [x for x in range(n) if x not in X]
        for s in sizes:
            if s < len(X):
                continue
            for rest in itertools.combinations(free, s - len(X)):
                first = tuple(sorted(X + rest))
                remaining = [x for x in range(n) if x not in first]
                for tail in _split(remaining, k - 1, sizes):
                    members.append(Cut((first, *tail)))
    members.sort()
    logging.debug(f"Realized {len(members)} balanced cuts (n={n}, r={r})")
    return CutFamily(n=n, r=r, delta=delta, X=X, members=members)


def _split(remaining: list, k: int, sizes: list):
    # ordered splits of the remaining vertices into k allowed blocks
    if k == 1:
        if len(remaining) in sizes:
            yield (tuple(remaining),)
        return
    for s in sizes:
        left = len(remaining) - s
        if not ((k - 1) * sizes[0] <= left <= (k - 1) * sizes[-1]):
            continue
        for block in itertools.combinations(remaining, s):
            rest = [x for x in remaining if x not in block]
            for tail in _split(rest, k - 1, sizes):
                yield (block, *tail)


# PURPOSE: equivalence components and rigidity of a graph
def rigidity_analysis(G: Graph, family: CutFamily, alpha) -> RigidityReport:
    """
    Maximum cuts of a family, the classes of vertices that share a
    block in every maximum cut, and the rigidity of the graph

    Parameters
    ----------
    G: Graph
        host graph
    family: CutFamily
        realized cut family
    alpha: float or Fraction
        rigidity slack

    Returns
    -------
    report: RigidityReport
        maximum cuts, components, rigidity and core
    """
    if len(family) == 0:
        raise ValueError("undefined rigidity: empty cut family")
    alpha = as_rational(alpha)
    value, cuts = max_cuts(G, family)
    n, r = G.n, family.r
    # vertices are equivalent when their block labels agree for every cut
    classes = {}
    for x in range(n):
        signature = tuple(cut.block(x) for cut in cuts)
        classes.setdefault(signature, []).append(x)
    components = sorted(tuple(C) for C in classes.values())
    pairs = sum(len(C) * (len(C) - 1) // 2 for C in components)
    threshold = (1 - alpha) * Fraction(n**2, 2 * (r - 1))
    rigid = pairs >= threshold
    core, diagnostic = None, None
    if rigid:
        large = [C for C in components if len(C) > Fraction(n, r)]
        if len(large) == r - 1:
            core = sorted(large, key=lambda C: cuts[0].block(C[0]))
        else:
            diagnostic = "parameter mismatch (alpha, delta)"
            logging.warning(
                f"Rigid graph with {len(large)} components larger than n/r: "
                f"{diagnostic}"
            )
    logging.debug(f"{len(cuts)} maximum cuts, {pairs} equivalent pairs")
    return RigidityReport(
        max_value=value,
        max_cuts=cuts,
        equivalent_pairs=pairs,
        rigid=rigid,
        core=core,
        components=components,
        threshold=threshold,
        diagnostic=diagnostic,
    )


# PURPOSE: edges crossing every maximum cut of a family
def crit(G: Graph, family: CutFamily, verify: bool = False) -> list:
    """
    Edges of ``G`` in the exterior of every maximum cut of a family

    Parameters
    ----------
    G: Graph
        host graph
    family: CutFamily
        realized cut family
    verify: bool, default False
        compare with the edge deletion characterization
    """
    _, cuts = max_cuts(G, family)
    edges = [e for e in G.edges if all(cut.is_cross(*e) for cut in cuts)]
    if verify:
        assert edges == crit_by_deletion(G, family), "crit(G) mismatch"
    return edges


def crit_by_deletion(G: Graph, family: CutFamily) -> list:
    """Edges whose deletion lowers the largest cut ``b(C, G)``"""
    best = family_max(G, family)
    return [e for e in G.edges if family_max(G.remove_edge(*e), family) < best]


# PURPOSE: largest share of edges at a vertex crossing a max cut
def cut_conjecture_stat(G: Graph) -> float:
    """
    Largest fraction of the edges at a vertex that cross an ordinary
    maximum cut, over all maximum cuts and non-isolated vertices

    Isolated vertices contribute 0

    Parameters
    ----------
    G: Graph
        host graph
    """
    statistic = Fraction(0)
    for cut in all_max_partitions(G, 2):
        for mask in cut.masks:
            for x in iter_bits(mask):
                d = popcount(G.rows[x])
                if d > 0:
                    ratio = Fraction(popcount(G.rows[x] & ~mask), d)
                    statistic = max(statistic, ratio)
    return float(statistic)


# PURPOSE: check that no internal edge can be added to a cut graph
def maximal_kr_free_cut(G: Graph, cut: Cut) -> bool:
    """
    Check that adding any edge of ``G`` inside a block of ``Pi`` to the
    cut graph ``Pi_G`` creates a ``K_r``

    Parameters
    ----------
    G: Graph
        host graph
    cut: Cut
        ordered ``(r-1)``-cut
    """
    H = cut_graph(G, cut)
    r = cut.r
    for i, A in enumerate(cut.parts):
        others = [list(B) for j, B in enumerate(cut.parts) if j != i]
        mask = vertex_mask(A)
        for x in A:
            for y in iter_bits(G.rows[x] & mask & ~((1 << (x + 1)) - 1)):
                if kappa(H, r, [(x, y), *others]) == 0:
                    return False
    return True
