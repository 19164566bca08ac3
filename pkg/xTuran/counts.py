#!/usr/bin/env python
"""
counts.py
Written by Tyler Sutterley (02/2026)
Counting functionals for K_r and K_r^- completions

    kappa_H(X_1..X_s): ways to choose disjoint Y_i in X_i and an
        (r - sum a_i)-set Z with all pairs among the r vertices present
        in H except pairs inside each Y_i
    tau(S_1..S_k): ordered choices of distinct x_i in S_i forming a clique
    sigma(R): pairs uv completing a K_r^- over some xy in R
    delta_bar: sum of E[I_K I_L] over intersecting K_r^- pair sets

UPDATE HISTORY:
    Updated 03/2026: added exact Delta-bar enumeration over K_r^- families
    Written 02/2026
"""

from __future__ import annotations

import math
import numbers
import logging
import itertools
import collections
from scipy.special import comb
from xTuran.graph import Graph, vertex_mask
from xTuran.utilities import popcount, iter_bits, pair_index

__all__ = [
    "KappaArg",
    "kappa",
    "kappa_choices",
    "kr_minus_family",
    "tau",
    "sigma_pair",
    "sigma",
    "kr_minus_sets",
    "product_moment",
    "delta_bar_kr_minus",
]


def _is_vertex(x) -> bool:
    return isinstance(x, numbers.Integral)


class KappaArg:
    """
    Argument ``X_i`` of ``kappa``: a collection of ``a_i``-subsets

    Attributes
    ----------
    members: list
        sorted vertex tuples of the collection
    arity: int
        common size ``a_i`` of the members
    """

    def __init__(self, members, arity: int):
        self.members = members
        self.arity = arity

    @classmethod
    def coerce(cls, obj):
        """
        Interpret an argument of ``kappa``

        - a tuple of vertices is a single explicit ``a``-subset
        - a set, list or range of vertices is a collection of 1-subsets
        - a collection of vertex tuples or sets is a collection of
          subsets of their common size
        """
        if isinstance(obj, KappaArg):
            return obj
        if isinstance(obj, tuple) and all(_is_vertex(x) for x in obj):
            if len(set(obj)) != len(obj):
                raise ValueError(f"Repeated vertex in {obj}")
            return cls([tuple(sorted(obj))], len(obj))
        items = list(obj)
        if all(_is_vertex(x) for x in items):
            members = sorted(set((x,) for x in items))
            return cls(members, 1)
        members = sorted(set(tuple(sorted(Y)) for Y in items))
        sizes = set(len(Y) for Y in members)
        if len(sizes) != 1:
            raise ValueError(f"Members of unequal size: {sorted(sizes)}")
        if any(len(set(Y)) != len(Y) for Y in members):
            raise ValueError("Repeated vertex in a member")
        return cls(members, sizes.pop())

    def __repr__(self) -> str:
        return f"KappaArg(arity={self.arity}, members={len(self.members)})"


def _coerce_all(r: int, args) -> list:
    args = [KappaArg.coerce(a) for a in args]
    total = sum(a.arity for a in args)
    if total > r:
        raise ValueError(f"Arities sum to {total} > r={r}")
    return args


def _choices(H: Graph, args: list, i: int, used: int, chosen: tuple):
    """Yield disjoint selections Y_1..Y_s joined by complete cross pairs"""
    if i == len(args):
        yield chosen
        return
    for Y in args[i].members:
        ymask = vertex_mask(Y)
        if ymask & used:
            continue
        if any((H.rows[y] & used) != used for y in Y):
            continue
        yield from _choices(H, args, i + 1, used | ymask, chosen + (Y,))


# PURPOSE: count K_r^- style completions
def kappa(H: Graph, r: int, args) -> int:
    """
    Number of ways to choose disjoint ``Y_i`` in ``X_i`` and a set ``Z``
    of ``r - sum(a_i)`` further vertices with all pairs among the ``r``
    chosen vertices present in ``H`` except pairs inside each ``Y_i``

    Parameters
    ----------
    H: Graph
        host graph
    r: int
        clique order
    args: list
        arguments ``X_1..X_s`` (see :class:`KappaArg`)

    Returns
    -------
    count: int
        number of choices
    """
    args = _coerce_all(r, args)
    k = r - sum(a.arity for a in args)
    # common neighborhood bitsets of each selected vertex set
    cache = {}
    count = 0
    for chosen in _choices(H, args, 0, 0, ()):
        used = vertex_mask(v for Y in chosen for v in Y)
        if used not in cache:
            cache[used] = H.common_neighbors(iter_bits(used)) & ~used
        count += H.count_cliques(k, cache[used])
    return count


def kappa_choices(H: Graph, r: int, args) -> list:
    """
    Explicit choices counted by :func:`kappa`

    Returns
    -------
    choices: list
        tuples ``(Y_1, ..., Y_s, Z)`` of sorted vertex tuples
    """
    args = _coerce_all(r, args)
    k = r - sum(a.arity for a in args)
    choices = []
    for chosen in _choices(H, args, 0, 0, ()):
        used = vertex_mask(v for Y in chosen for v in Y)
        candidates = H.common_neighbors(iter_bits(used)) & ~used
        for Z in H.cliques(k, within=candidates):
            choices.append(chosen + (Z,))
    return choices


# PURPOSE: explicit K_r^- copies over a pair and blocks
def kr_minus_family(
    G: Graph, xy: tuple, blocks: list, r: int | None = None
) -> list:
    """
    Pair sets of the ``K_r^-`` copies counted by
    ``kappa(xy, A_2, ..., A_{r-1})``: ``xy`` plus one vertex from each
    block, all pairs present except ``xy``

    Parameters
    ----------
    G: Graph
        host graph
    xy: tuple
        the missing pair
    blocks: list
        disjoint vertex sets
    r: int or None, default None
        clique order (default: number of blocks plus two)

    Returns
    -------
    family: list
        frozensets of the ``C(r,2) - 1`` pairs of each copy
    """
    blocks = [set(int(v) for v in A) for A in blocks]
    x, y = sorted(int(v) for v in xy)
    seen = {x, y}
    for A in blocks:
        if A & seen:
            raise ValueError("Blocks must be disjoint and avoid x, y")
        seen |= A
    if r is None:
        r = len(blocks) + 2
    family = []
    for choice in kappa_choices(G, r, [(x, y), *blocks]):
        vertices = sorted(v for Y in choice for v in Y)
        pairs = frozenset(
            e for e in itertools.combinations(vertices, 2) if e != (x, y)
        )
        family.append(pairs)
    return family


# PURPOSE: ordered cliques with one vertex from each set
def tau(G: Graph, sets: list) -> int:
    """
    Number of choices of distinct ``x_1..x_k`` with ``x_i`` in ``S_i``
    inducing a complete graph

    Sets must be pairwise disjoint or identical (repeated copies of
    one set)

    Parameters
    ----------
    G: Graph
        host graph
    sets: list
        vertex sets ``S_1..S_k``
    """
    masks = [vertex_mask(S) for S in sets]
    for a, b in itertools.combinations(masks, 2):
        if (a & b) and (a != b):
            raise ValueError("Sets must be pairwise disjoint")

    def extend(i: int, candidates_by_set: int, used: int) -> int:
        if i == len(masks):
            return 1
        total = 0
        for v in iter_bits(masks[i] & candidates_by_set & ~used):
            total += extend(i + 1, candidates_by_set & G.rows[v], used | 1 << v)
        return total

    return extend(0, (1 << G.n) - 1, 0)


def _check_sigma_order(r: int):
    if r < 4:
        raise ValueError(f"sigma is defined for r >= 4: {r}")


def sigma_pair(G: Graph, R, r: int, u: int, v: int) -> int:
    """
    Indicator that some ``xy`` in ``R`` disjoint from ``{u, v}`` and a
    set ``W`` of ``r-4`` vertices complete a ``K_r^-`` missing ``xy``
    """
    _check_sigma_order(r)
    if (u == v) or not G.has_edge(u, v):
        return 0
    uv = G.rows[u] & G.rows[v]
    for x, y in R:
        if len({x, y, u, v}) < 4:
            continue
        if not ((uv >> x) & 1 and (uv >> y) & 1):
            continue
        candidates = uv & G.rows[x] & G.rows[y]
        if G.has_clique(r - 4, within=candidates):
            return 1
    return 0


# PURPOSE: number of pairs completing a K_r^- over a pair set
def sigma(G: Graph, R, r: int) -> int:
    """
    Number of pairs ``{u, v}`` with ``sigma_R(u, v) = 1``

    Parameters
    ----------
    G: Graph
        host graph
    R: iterable
        vertex pairs ``xy``
    r: int
        clique order (at least 4)
    """
    _check_sigma_order(r)
    R = [tuple(sorted(e)) for e in R]
    return sum(sigma_pair(G, R, r, u, v) for u, v in G.edges)


# PURPOSE: K_r^- pair sets of the complete graph over a pair set
def kr_minus_sets(n: int, r: int, R) -> list:
    """
    Pair-index bitsets of ``K(xy, Z)``: all pairs of ``{x, y} + Z``
    except ``xy``, for ``xy`` in ``R`` and ``Z`` an ``(r-2)``-set

    Parameters
    ----------
    n: int
        number of vertices
    r: int
        clique order
    R: iterable
        vertex pairs ``xy``
    """
    sets = []
    for x, y in sorted(tuple(sorted(e)) for e in R):
        others = [v for v in range(n) if v not in (x, y)]
        for Z in itertools.combinations(others, r - 2):
            vertices = sorted((x, y) + Z)
            mask = 0
            for a, b in itertools.combinations(vertices, 2):
                if (a, b) != (x, y):
                    mask |= 1 << pair_index(n, a, b)
            sets.append(mask)
    return sets


def product_moment(K: int, L: int, p: float) -> float:
    """``E[I_K I_L] = p^|K u L|`` for pair-index bitsets"""
    return float(p) ** popcount(K | L)


# PURPOSE: exact Delta-bar of a K_r^- family and its closed-form bound
def delta_bar_kr_minus(n: int, p: float, r: int, R, limit: int = 12) -> tuple:
    """
    Exact ``Delta-bar = sum E[I_K I_L]`` over ordered pairs of
    intersecting ``K(xy, Z)`` (diagonal included) and the bound

    ``|R| n^(2r-4) p^(r^2-r-2) [sum_{b=3}^r n^(2-b) p^(1-C(b,2))
    + B (|R| + Delta_R n) sum_{b=2}^r n^(-b) p^(-C(b,2))]``

    with ``B = r!`` and ``Delta_R`` the maximum degree of ``R``

    Parameters
    ----------
    n: int
        number of vertices
    p: float
        edge probability
    r: int
        clique order
    R: iterable
        vertex pairs ``xy``
    limit: int, default 12
        maximum number of vertices

    Returns
    -------
    exact: float
        enumerated Delta-bar
    bound: float
        closed-form bound
    """
    if n > limit:
        raise ValueError(f"Exact enumeration limited to n <= {limit}: {n}")
    if not (0 < float(p) <= 1):
        raise ValueError(f"Edge probability outside (0, 1]: {p}")
    R = sorted(set(tuple(sorted(e)) for e in R))
    sets = kr_minus_sets(n, r, R)
    # index sets by pair for intersecting lookups
    by_pair = collections.defaultdict(list)
    for i, K in enumerate(sets):
        for e in iter_bits(K):
            by_pair[e].append(i)
    unions = collections.Counter()
    for i, K in enumerate(sets):
        partners = set()
        for e in iter_bits(K):
            partners.update(by_pair[e])
        for j in partners:
            unions[popcount(K | sets[j])] += 1
    exact = sum(count * float(p) ** u for u, count in unions.items())
    # closed-form bound
    p = float(p)
    degree = collections.Counter(v for e in R for v in e)
    max_degree = max(degree.values()) if degree else 0
    B = math.factorial(r)
    first = sum(
        n ** (2.0 - b) * p ** (1.0 - comb(b, 2, exact=True))
        for b in range(3, r + 1)
    )
    second = sum(
        n ** (-float(b)) * p ** (-float(comb(b, 2, exact=True)))
        for b in range(2, r + 1)
    )
    prefactor = len(R) * n ** (2.0 * r - 4) * p ** (r**2 - r - 2)
    bound = prefactor * (first + B * (len(R) + max_degree * n) * second)
    logging.debug(f"Delta-bar {exact:g} with bound {bound:g}")
    return (exact, bound)
