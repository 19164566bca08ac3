#!/usr/bin/env python
"""
simulate.py
Written by Tyler Sutterley (02/2026)
Monte-Carlo and exhaustive checks of tail bounds, correlation
inequalities and the agreement of G(n,p) and G(n,M)

Random subsets and random graphs are sampled as boolean matrices of
pair indicators with one row per trial. Trials are drawn in fixed size
batches with a generator keyed by (seed, batch) so that estimates do
not depend on the number of threads

PYTHON DEPENDENCIES:
    numpy: Scientific Computing Tools For Python
        https://numpy.org
        https://numpy.org/doc/stable/user/numpy-for-matlab-users.html
    scipy: Scientific Tools for Python
        https://docs.scipy.org/doc/

UPDATE HISTORY:
    Updated 03/2026: added exhaustive oracles for small ground sets
    Written 02/2026
"""

from __future__ import annotations

import logging
import itertools
import dataclasses
import numpy as np
import scipy.sparse
import scipy.sparse.csgraph
from xTuran.bounds import TailFamily
from xTuran.datasets import get_event, get_pair
from xTuran.utilities import (
    master_seed,
    random_generator,
    pair_count,
    pair_index,
    parallel_map,
)

__all__ = [
    "GraphEvent",
    "TwoModelReport",
    "sample_subsets",
    "family_counts",
    "empirical_lower_tail",
    "exact_lower_tail",
    "harris_covariance_check",
    "exact_covariance",
    "exact_event_probability",
    "two_model_compare",
]

# number of trials drawn by each keyed generator
BATCH = 4096


class GraphEvent:
    """
    Monotone property of a graph evaluated on pair indicator matrices

    Parameters
    ----------
    kind: str
        ``edges_at_most``, ``edges_at_least``, ``clique``,
        ``clique_free``, ``isolated_vertex`` or ``connected``
    k: int or None, default None
        threshold or clique order
    monotone: str, default "increasing"
        monotonicity recorded in the catalog
    identifier: str or None, default None
        catalog id
    """

    kinds = (
        "edges_at_most",
        "edges_at_least",
        "clique",
        "clique_free",
        "isolated_vertex",
        "connected",
    )

    def __init__(
        self,
        kind: str,
        k: int | None = None,
        monotone: str = "increasing",
        identifier: str | None = None,
    ):
        if kind not in self.kinds:
            raise ValueError(f"Unknown event kind {kind!r}")
        if monotone not in ("increasing", "decreasing"):
            raise ValueError(f"Unknown monotonicity {monotone!r}")
        self.kind = kind
        self.k = k
        self.monotone = monotone
        self.identifier = identifier or kind

    @classmethod
    def from_catalog(cls, identifier: str, **kwargs):
        """Event from its catalog id"""
        entry = get_event(identifier, **kwargs)
        return cls.from_entry(entry)

    @classmethod
    def from_entry(cls, entry: dict):
        return cls(
            entry["kind"],
            k=entry.get("k"),
            monotone=entry.get("monotone", "increasing"),
            identifier=entry.get("id"),
        )

    def __call__(self, Y: np.ndarray, n: int) -> np.ndarray:
        """
        Evaluate the event on each row of a pair indicator matrix

        Parameters
        ----------
        Y: np.ndarray
            boolean ``(trials, C(n,2))`` pair indicators
        n: int
            number of vertices
        """
        Y = np.atleast_2d(np.asarray(Y, dtype=bool))
        if Y.shape[1] != pair_count(n):
            raise ValueError(f"Expected {pair_count(n)} pair columns")
        if self.kind == "edges_at_most":
            return Y.sum(axis=1) <= self.k
        if self.kind == "edges_at_least":
            return Y.sum(axis=1) >= self.k
        if self.kind in ("clique", "clique_free"):
            F = TailFamily.clique_family(n, self.k)
            present = family_counts(F, Y) > 0
            return present if (self.kind == "clique") else ~present
        if self.kind == "isolated_vertex":
            return (Y.astype(np.int64) @ _incidence(n) == 0).any(axis=1)
        return np.array([_connected(row, n) for row in Y], dtype=bool)

    def __repr__(self) -> str:
        return f"GraphEvent({self.identifier!r}, {self.monotone})"


def _incidence(n: int) -> np.ndarray:
    # pair to vertex incidence matrix
    M = np.zeros((pair_count(n), n), dtype=np.int64)
    for u, v in itertools.combinations(range(n), 2):
        M[pair_index(n, u, v), [u, v]] = 1
    return M


def _connected(row: np.ndarray, n: int) -> bool:
    u, v = np.triu_indices(n, k=1)
    A = scipy.sparse.coo_matrix(
        (np.ones(row.sum()), (u[row], v[row])), shape=(n, n)
    )
    count, _ = scipy.sparse.csgraph.connected_components(A, directed=False)
    return count == 1


@dataclasses.dataclass
class TwoModelReport:
    """
    Event probabilities under ``G(n,p)`` and ``G(n,M)``

    Attributes
    ----------
    event: str
        catalog id
    n: int
        number of vertices
    p: float
        edge probability
    M: int
        number of edges ``round(p C(n,2))``
    gnp: float
        estimate under ``G(n,p)``
    gnp_stderr: float
        standard error of ``gnp``
    gnm: float
        estimate under ``G(n,M)``
    gnm_stderr: float
        standard error of ``gnm``
    difference: float
        ``|gnp - gnm|``
    """

    event: str
    n: int
    p: float
    M: int
    gnp: float
    gnp_stderr: float
    gnm: float
    gnm_stderr: float
    difference: float

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)


# PURPOSE: draw random subsets of a ground set in keyed batches
def sample_subsets(
    N: int, p: float, trials: int, seed=None, threads: int = 1
) -> np.ndarray:
    """
    Boolean ``(trials, N)`` matrix of independent inclusions

    Parameters
    ----------
    N: int
        ground set size
    p: float
        inclusion probability
    trials: int
        number of rows
    seed: int or None, default None
        master seed
    threads: int, default 1
        number of worker threads
    """
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"Inclusion probability outside [0, 1]: {p}")
    seed = master_seed(seed)

    def batch(b: int) -> np.ndarray:
        size = min(BATCH, trials - b * BATCH)
        rng = random_generator(seed, b)
        return rng.random((size, N)) < p

    batches = range(-(-trials // BATCH))
    rows = parallel_map(batch, batches, threads=threads)
    return np.concatenate(rows) if rows else np.zeros((0, N), dtype=bool)


def _sample_gnm(n: int, M: int, trials: int, seed=None) -> np.ndarray:
    # uniform M-subsets of the pairs by ranking uniform keys
    N = pair_count(n)
    seed = master_seed(seed)
    rows = []
    for b in range(-(-trials // BATCH)):
        size = min(BATCH, trials - b * BATCH)
        rng = random_generator(seed, b)
        keys = rng.random((size, N))
        order = np.argsort(keys, axis=1)[:, :M]
        Y = np.zeros((size, N), dtype=bool)
        np.put_along_axis(Y, order, True, axis=1)
        rows.append(Y)
    return np.concatenate(rows) if rows else np.zeros((0, N), dtype=bool)


def family_counts(F: TailFamily, Y: np.ndarray) -> np.ndarray:
    """
    Number of satisfied outer events ``X = sum_i I_i`` for each row

    Parameters
    ----------
    F: TailFamily
        event family
    Y: np.ndarray
        boolean ``(trials, N)`` random subsets
    """
    M = F.membership().astype(np.int64)
    sizes = M.sum(axis=0)
    inner = (Y.astype(np.int64) @ M) == sizes
    # group inner events by their outer index
    outer = np.zeros((M.shape[1], len(F)), dtype=np.int64)
    for column, (i, _) in enumerate(F.indices):
        outer[column, i] = 1
    return ((inner.astype(np.int64) @ outer) > 0).sum(axis=1)


def _mean(F: TailFamily, p: float) -> float:
    return sum(p ** len(A) for A in F.subsets)


# PURPOSE: Monte-Carlo lower tail of a count of increasing events
def empirical_lower_tail(
    F: TailFamily, p: float, t: float, trials: int, seed=None, **kwargs
) -> tuple:
    """
    Estimate ``P(X <= mu - t)`` with ``mu = sum_ij p^|A_ij|``

    Parameters
    ----------
    F: TailFamily
        event family
    p: float
        inclusion probability
    t: float
        deviation
    trials: int
        number of samples
    seed: int or None, default None
        master seed
    threads: int, default 1
        number of worker threads
    limit: int, default 2000
        largest number of inner events

    Returns
    -------
    estimate: float
        fraction of samples in the lower tail
    stderr: float
        binomial standard error
    """
    kwargs.setdefault("threads", 1)
    kwargs.setdefault("limit", 2000)
    if trials < 1:
        raise ValueError(f"Number of trials must be positive: {trials}")
    if len(F.subsets) > kwargs["limit"]:
        raise ValueError(f"Families are limited to {kwargs['limit']} events")
    mu = _mean(F, p)
    Y = sample_subsets(F.ground_size, p, trials, seed, kwargs["threads"])
    X = family_counts(F, Y)
    hits = X <= (mu - t + 1e-12)
    estimate = float(hits.mean())
    stderr = float(np.sqrt(estimate * (1.0 - estimate) / trials))
    logging.debug(f"Lower tail {estimate:0.5f} +/- {stderr:0.5f}")
    return (estimate, stderr)


def _outcomes(N: int, limit: int) -> np.ndarray:
    # every subset of the ground set as a boolean row
    if N > limit:
        raise ValueError(f"Exhaustive enumeration is limited to {limit}")
    codes = np.arange(2**N, dtype=np.int64)[:, None]
    return ((codes >> np.arange(N)) & 1).astype(bool)


def _weights(Y: np.ndarray, p: float) -> np.ndarray:
    k = Y.sum(axis=1)
    return (p**k) * ((1.0 - p) ** (Y.shape[1] - k))


def exact_lower_tail(F: TailFamily, p: float, t: float, limit: int = 16):
    """
    ``P(X <= mu - t)`` by enumerating every subset of the ground set

    Parameters
    ----------
    F: TailFamily
        event family
    p: float
        inclusion probability
    t: float
        deviation
    limit: int, default 16
        largest ground set size
    """
    Y = _outcomes(F.ground_size, limit)
    X = family_counts(F, Y)
    hits = X <= (_mean(F, p) - t + 1e-12)
    return float(np.sum(_weights(Y, p)[hits]))


def _pair_events(pair: str, extra_catalogs: list) -> tuple:
    entry = get_pair(pair, extra_catalogs=extra_catalogs)
    f = GraphEvent.from_entry(entry["f"])
    g = GraphEvent.from_entry(entry["g"])
    return (f, g)


# PURPOSE: Monte-Carlo covariance of two monotone graph events
def harris_covariance_check(
    pair: str, n: int, p: float, trials: int, seed=None, **kwargs
) -> tuple:
    """
    Estimate ``Cov(f, g)`` for a catalog pair of monotone events

    Events of opposite monotonicity are negatively correlated and
    events of equal monotonicity are positively correlated

    Parameters
    ----------
    pair: str
        catalog pair id
    n: int
        number of vertices
    p: float
        edge probability
    trials: int
        number of sampled graphs
    seed: int or None, default None
        master seed
    threads: int, default 1
        number of worker threads
    extra_catalogs: list, default []
        additional catalogs

    Returns
    -------
    covariance: float
        covariance estimate
    stderr: float
        standard error of the estimate
    """
    kwargs.setdefault("threads", 1)
    kwargs.setdefault("extra_catalogs", [])
    if trials < 2:
        raise ValueError(f"Need at least two trials: {trials}")
    f, g = _pair_events(pair, kwargs["extra_catalogs"])
    Y = sample_subsets(pair_count(n), p, trials, seed, kwargs["threads"])
    F = f(Y, n).astype(float)
    G = g(Y, n).astype(float)
    products = (F - F.mean()) * (G - G.mean())
    covariance = float(products.mean())
    stderr = float(products.std(ddof=1) / np.sqrt(trials))
    logging.info(f"Cov({f.identifier}, {g.identifier}) = {covariance:0.5f}")
    return (covariance, stderr)


def exact_covariance(pair: str, n: int, p: float, **kwargs) -> float:
    """
    Exact ``Cov(f, g)`` over all graphs on ``n`` vertices

    Parameters
    ----------
    pair: str
        catalog pair id
    n: int
        number of vertices
    p: float
        edge probability
    limit: int, default 16
        largest number of vertex pairs
    extra_catalogs: list, default []
        additional catalogs
    """
    kwargs.setdefault("limit", 16)
    kwargs.setdefault("extra_catalogs", [])
    f, g = _pair_events(pair, kwargs["extra_catalogs"])
    Y = _outcomes(pair_count(n), kwargs["limit"])
    w = _weights(Y, p)
    F = f(Y, n).astype(float)
    G = g(Y, n).astype(float)
    return float(np.sum(w * F * G) - np.sum(w * F) * np.sum(w * G))


def exact_event_probability(
    event: str, n: int, p: float, model: str = "gnp", **kwargs
) -> float:
    """
    Exact probability of a catalog event under ``G(n,p)`` or under
    ``G(n,M)`` with ``M = round(p C(n,2))``

    Parameters
    ----------
    event: str
        catalog event id
    n: int
        number of vertices
    p: float
        edge probability
    model: str, default "gnp"
        ``gnp`` or ``gnm``
    limit: int, default 16
        largest number of vertex pairs
    """
    kwargs.setdefault("limit", 16)
    f = GraphEvent.from_catalog(event)
    Y = _outcomes(pair_count(n), kwargs["limit"])
    values = f(Y, n)
    if model == "gnp":
        return float(np.sum(_weights(Y, p)[values]))
    elif model == "gnm":
        M = int(round(p * pair_count(n)))
        uniform = Y.sum(axis=1) == M
        return float(values[uniform].mean())
    raise ValueError(f"Unknown random graph model {model!r}")


# PURPOSE: compare an event under the binomial and uniform models
def two_model_compare(
    event: str, n: int, p: float, trials: int, seed=None, **kwargs
) -> TwoModelReport:
    """
    Estimate an event under ``G(n,p)`` and ``G(n,M)`` with
    ``M = round(p C(n,2))``

    Parameters
    ----------
    event: str
        catalog event id
    n: int
        number of vertices
    p: float
        edge probability
    trials: int
        number of sampled graphs in each model
    seed: int or None, default None
        master seed
    threads: int, default 1
        number of worker threads
    """
    kwargs.setdefault("threads", 1)
    if trials < 1:
        raise ValueError(f"Number of trials must be positive: {trials}")
    f = GraphEvent.from_catalog(event)
    N = pair_count(n)
    M = int(round(p * N))
    # independent streams for the two models
    seed = master_seed(seed)
    seeds = ((seed, 0), (seed, 1))
    gnp = f(sample_subsets(N, p, trials, seeds[0], kwargs["threads"]), n)
    gnm = f(_sample_gnm(n, M, trials, seeds[1]), n)
    a, b = float(gnp.mean()), float(gnm.mean())
    return TwoModelReport(
        event=event,
        n=n,
        p=float(p),
        M=M,
        gnp=a,
        gnp_stderr=float(np.sqrt(a * (1.0 - a) / trials)),
        gnm=b,
        gnm_stderr=float(np.sqrt(b * (1.0 - b) / trials)),
        difference=abs(a - b),
    )
