#!/usr/bin/env python
"""
bounds.py
Written by Tyler Sutterley (02/2026)
Tail bounds for binomial variables, weighted Bernoulli sums and counts
of increasing events of a random subset of a finite ground set

    Chernoff upper: exp[-l^2/(2(mu + l/3))]
    Chernoff lower: exp[-l^2/(2 mu)]
    weighted Bernoulli: exp[-eta l/(4z)]
    Janson: P(X <= mu - t) <= exp[-t^2/(2 Delta-bar)]
    TRW: P(X <= mu - t) <= exp[-(t-gamma)^2/(2 Theta-bar)]
        refined: exp[-phi((gamma-t)/mu) mu^2/Theta-bar]
        phi(x) = (1+x) log(1+x) - x

Events are families A_ij of subsets of the ground set. Each X_i is the
union over j of the events that A_ij is contained in the random subset
and X counts the X_i. Janson families have one inner event per i.
The TRW gamma is stored as gamma_overlap to separate it from the
bad-pair constant of the cut analysis.

PYTHON DEPENDENCIES:
    numpy: Scientific Computing Tools For Python
        https://numpy.org
        https://numpy.org/doc/stable/user/numpy-for-matlab-users.html
    scipy: Scientific Tools for Python
        https://docs.scipy.org/doc/

UPDATE HISTORY:
    Updated 03/2026: added refined TRW exponent
    Written 02/2026
"""

from __future__ import annotations

import json
import logging
import pathlib
import itertools
import dataclasses
import numpy as np
import scipy.special
from xTuran.utilities import popcount, pair_count, pair_index

__all__ = [
    "chernoff_upper",
    "chernoff_lower",
    "weighted_bernoulli_bound",
    "TailFamily",
    "TailBoundInput",
    "family_stats",
    "janson_bound",
    "trw_bound",
]


def _check_chernoff(mu: float, lam: float):
    if mu <= 0:
        raise ValueError(f"Mean must be positive: {mu}")
    if lam < 0:
        raise ValueError(f"Deviation must be nonnegative: {lam}")


def chernoff_upper(mu: float, lam: float) -> float:
    """
    Upper tail ``P(X >= mu + lam) <= exp[-lam^2/(2(mu + lam/3))]``
    of a binomial variable with mean ``mu``
    """
    _check_chernoff(mu, lam)
    return float(np.exp(-(lam**2) / (2.0 * (mu + lam / 3.0))))


def chernoff_lower(mu: float, lam: float) -> float:
    """
    Lower tail ``P(X <= mu - lam) <= exp[-lam^2/(2 mu)]``
    of a binomial variable with mean ``mu``
    """
    _check_chernoff(mu, lam)
    return float(np.exp(-(lam**2) / (2.0 * mu)))


# PURPOSE: tail of a weighted sum of independent Bernoullis
def weighted_bernoulli_bound(psi: float, lam: float, eta: float, z: float):
    """
    Bound ``exp[-eta lam/(4z)]`` on ``P(|X - psi| > lam)`` for a sum of
    independent Bernoullis with weights in ``[0, z]`` and mean ``psi``

    Parameters
    ----------
    psi: float
        mean of the weighted sum
    lam: float
        deviation, at least ``eta psi``
    eta: float
        relative deviation in ``[0, 1]``
    z: float
        largest weight
    """
    if not (0.0 <= eta <= 1.0):
        raise ValueError(f"eta must be in [0, 1]: {eta}")
    if z <= 0:
        raise ValueError(f"Largest weight must be positive: {z}")
    if lam < eta * psi:
        raise ValueError(f"Deviation {lam} below eta*psi = {eta * psi}")
    return float(np.exp(-eta * lam / (4.0 * z)))


class TailFamily:
    """
    Families ``A_ij`` of subsets of the ground set ``0..N-1``

    Parameters
    ----------
    ground_size: int
        size ``N`` of the ground set
    events: list
        for each ``i`` a list of subsets ``A_ij``
    """

    def __init__(self, ground_size: int, events):
        self.ground_size = int(ground_size)
        if self.ground_size < 0:
            raise ValueError(f"Invalid ground set size: {ground_size}")
        self.events = []
        for group in events:
            group = [tuple(sorted(set(int(g) for g in A))) for A in group]
            if len(group) == 0:
                raise ValueError("Every event needs at least one subset")
            for A in group:
                if any(not (0 <= g < self.ground_size) for g in A):
                    raise ValueError(f"Subset {A} outside the ground set")
            self.events.append(group)

    @classmethod
    def flat(cls, ground_size: int, subsets):
        """Family with a single inner event for each ``i``"""
        return cls(ground_size, [[A] for A in subsets])

    # PURPOSE: events of containing each k-clique of K_n
    @classmethod
    def clique_family(cls, n: int, k: int):
        """
        Flat family of the ``k``-cliques of ``K_n`` over the pair
        universe of an ``n`` vertex graph
        """
        subsets = []
        for clique in itertools.combinations(range(n), k):
            pairs = itertools.combinations(clique, 2)
            subsets.append([pair_index(n, u, v) for u, v in pairs])
        return cls.flat(pair_count(n), subsets)

    @classmethod
    def from_json(cls, description: dict | str | pathlib.Path):
        """
        Read a family from ``{ground_size, events}``

        Each event is either a list of ground set indices or a list of
        such lists
        """
        if not isinstance(description, dict):
            with pathlib.Path(description).open(encoding="utf-8") as fid:
                description = json.load(fid)
        events = []
        for event in description["events"]:
            if all(isinstance(g, int) for g in event):
                events.append([event])
            else:
                events.append(event)
        return cls(description["ground_size"], events)

    def to_json(self) -> dict:
        events = [
            list(group[0]) if len(group) == 1 else [list(A) for A in group]
            for group in self.events
        ]
        return dict(ground_size=self.ground_size, events=events)

    @property
    def is_flat(self) -> bool:
        """Single inner event for each ``i``"""
        return all(len(group) == 1 for group in self.events)

    @property
    def indices(self) -> list:
        """``(i, j)`` index of each inner event"""
        sizes = [len(group) for group in self.events]
        return [(i, j) for i, size in enumerate(sizes) for j in range(size)]

    @property
    def subsets(self) -> list:
        """Inner subsets ``A_ij`` in index order"""
        return [A for group in self.events for A in group]

    def masks(self) -> list:
        """Ground set bitsets of the inner subsets"""
        return [sum(1 << g for g in A) for A in self.subsets]

    def membership(self) -> np.ndarray:
        """Boolean ``(N, events)`` incidence of ground elements and subsets"""
        M = np.zeros((self.ground_size, len(self.subsets)), dtype=bool)
        for column, A in enumerate(self.subsets):
            M[list(A), column] = True
        return M

    def __len__(self) -> int:
        return len(self.events)

    def __repr__(self) -> str:
        return f"TailFamily(N={self.ground_size}, events={len(self.events)})"


@dataclasses.dataclass
class TailBoundInput:
    """
    Statistics of a family of increasing events

    Attributes
    ----------
    mu: float
        ``sum_ij E I_ij``
    delta_bar: float
        ``sum E I_ij I_kl`` over dependent ordered pairs
    theta_bar: float
        ``sum_ij sum_k P(B_ij and some dependent B_kl)``
    gamma_overlap: float
        ``sum_i sum_{j<k} E I_ij I_ik``
    t: float
        lower tail deviation
    theta_fallback: bool
        ``theta_bar`` replaced by ``delta_bar``
    """

    mu: float
    delta_bar: float
    theta_bar: float
    gamma_overlap: float = 0.0
    t: float = 0.0
    theta_fallback: bool = False

    def __post_init__(self):
        tolerance = 1e-12 * max(1.0, abs(self.delta_bar))
        if self.theta_bar < 0:
            raise ValueError(f"theta_bar must be nonnegative: {self.theta_bar}")
        if self.theta_bar > self.delta_bar + tolerance:
            raise ValueError(
                f"theta_bar={self.theta_bar} exceeds delta_bar={self.delta_bar}"
            )
        if self.gamma_overlap < 0:
            raise ValueError(f"Negative gamma_overlap: {self.gamma_overlap}")

    def with_t(self, t: float):
        """Copy with a new deviation ``t``"""
        return dataclasses.replace(self, t=float(t))

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)


def _union_probability(base: int, others: list, p: float) -> float:
    # P(B_base and at least one of the others) by inclusion-exclusion
    total = 0.0
    for size in range(1, len(others) + 1):
        sign = 1.0 if (size % 2) else -1.0
        for subset in itertools.combinations(others, size):
            union = base
            for mask in subset:
                union |= mask
            total += sign * p ** popcount(union)
    return total


# PURPOSE: exact statistics of a family of increasing events
def family_stats(F: TailFamily, p: float, **kwargs) -> TailBoundInput:
    """
    Exact ``mu``, ``Delta-bar``, ``Theta-bar`` and ``gamma`` of a family

    Two inner events are dependent when their subsets intersect;
    every inner event depends on itself

    Parameters
    ----------
    F: TailFamily
        event family
    p: float
        inclusion probability of each ground element
    limit: int, default 2000
        largest number of inner events
    neighbors: int, default 16
        largest number of dependent ``l`` for exact ``Theta-bar``

    Returns
    -------
    stats: TailBoundInput
        family statistics with ``t = 0``
    """
    kwargs.setdefault("limit", 2000)
    kwargs.setdefault("neighbors", 16)
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"Inclusion probability outside [0, 1]: {p}")
    masks = F.masks()
    if len(masks) > kwargs["limit"]:
        raise ValueError(f"Families are limited to {kwargs['limit']} events")
    index = F.indices
    mu = sum(p ** popcount(A) for A in masks)
    # dependent ordered pairs including the diagonal
    delta_bar = 0.0
    for a, A in enumerate(masks):
        for b, B in enumerate(masks):
            if (a == b) or (A & B):
                delta_bar += p ** popcount(A | B)
    gamma_overlap = 0.0
    for group in F.events:
        group_masks = [sum(1 << g for g in A) for A in group]
        for A, B in itertools.combinations(group_masks, 2):
            gamma_overlap += p ** popcount(A | B)
    # Theta-bar grouped by the outer index k of the dependent events
    theta_bar, fallback = 0.0, False
    for a, A in enumerate(masks):
        groups = {}
        for b, B in enumerate(masks):
            if (a == b) or (A & B):
                groups.setdefault(index[b][0], []).append(B)
        if max(len(g) for g in groups.values()) > kwargs["neighbors"]:
            fallback = True
            break
        theta_bar += sum(_union_probability(A, g, p) for g in groups.values())
    if fallback:
        logging.warning("Theta-bar neighborhood too large, using Delta-bar")
        theta_bar = delta_bar
    # inclusion-exclusion rounding
    theta_bar = min(max(theta_bar, 0.0), delta_bar)
    return TailBoundInput(
        mu=mu,
        delta_bar=delta_bar,
        theta_bar=theta_bar,
        gamma_overlap=gamma_overlap,
        theta_fallback=fallback,
    )


# PURPOSE: Janson lower tail inequality
def janson_bound(stats: TailBoundInput) -> float:
    """
    ``P(X <= mu - t) <= exp[-t^2/(2 Delta-bar)]`` for ``t`` in ``[0, mu]``

    Parameters
    ----------
    stats: TailBoundInput
        family statistics and deviation ``t``
    """
    if not (0.0 <= stats.t <= stats.mu):
        raise ValueError(f"t={stats.t} outside [0, mu={stats.mu}]")
    if stats.delta_bar <= 0:
        raise ValueError(f"Delta-bar must be positive: {stats.delta_bar}")
    return float(np.exp(-(stats.t**2) / (2.0 * stats.delta_bar)))


def _phi(x: float) -> float:
    # (1+x) log(1+x) - x with phi(-1) = 1
    return float(scipy.special.xlogy(1.0 + x, 1.0 + x) - x)


# PURPOSE: generalized Riordan-Warnke lower tail inequality
def trw_bound(stats: TailBoundInput, refined: bool = False) -> float:
    """
    ``P(X <= mu - t) <= exp[-(t-gamma)^2/(2 Theta-bar)]`` for ``t`` in
    ``[gamma, mu]``

    Parameters
    ----------
    stats: TailBoundInput
        family statistics and deviation ``t``
    refined: bool, default False
        use ``exp[-phi((gamma-t)/mu) mu^2/Theta-bar]``
    """
    t, gamma, mu = stats.t, stats.gamma_overlap, stats.mu
    if not (gamma <= t <= mu):
        raise ValueError(f"t={t} outside [gamma={gamma}, mu={mu}]")
    if stats.theta_bar <= 0:
        raise ValueError(f"Theta-bar must be positive: {stats.theta_bar}")
    if refined:
        if mu <= 0:
            raise ValueError(f"Refined bound needs a positive mean: {mu}")
        exponent = _phi((gamma - t) / mu) * mu**2 / stats.theta_bar
    else:
        exponent = (t - gamma) ** 2 / (2.0 * stats.theta_bar)
    return float(np.exp(-exponent))
