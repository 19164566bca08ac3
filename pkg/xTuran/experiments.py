#!/usr/bin/env python
"""
experiments.py
Written by Tyler Sutterley (02/2026)
Seeded experiments on random graphs: the probability that the largest
K_r-free subgraph is (r-1)-partite, sweeps and bisection over p, the
clique stopping-time process and maximum cuts of G(n,p)

Trial k of an experiment draws its graph from a generator keyed by
(master_seed, k) so that results do not depend on the order or the
number of threads used to evaluate the trials

PYTHON DEPENDENCIES:
    numpy: Scientific Computing Tools For Python
        https://numpy.org
        https://numpy.org/doc/stable/user/numpy-for-matlab-users.html
    scipy: Scientific Tools for Python
        https://docs.scipy.org/doc/
    xarray: N-D labeled arrays and datasets in Python
        https://docs.xarray.dev/en/stable/

UPDATE HISTORY:
    Updated 03/2026: report edges whose K_r copies all use the last edge
    Written 02/2026
"""

from __future__ import annotations

import json
import logging
import pathlib
import dataclasses
import numpy as np
import xarray as xr
import scipy.stats
from xTuran.graph import Graph
from xTuran.generators import sample_gnp, stopping_time_process
from xTuran.solvers import turan_gap, brute_max_partite
from xTuran.cuts import cut_conjecture_stat
from xTuran.constants import ParamSet, threshold_p
from xTuran.utilities import random_generator, parallel_map
import xTuran.io
import xTuran.version

__all__ = [
    "ExperimentConfig",
    "SweepRow",
    "BisectResult",
    "StoppingTimeReport",
    "CutConjReport",
    "equality_trial",
    "estimate_equality_prob",
    "sweep",
    "bisect_threshold",
    "dependent_edges",
    "stopping_time_study",
    "cutconj_study",
]


@dataclasses.dataclass
class ExperimentConfig:
    """
    Configuration of an equality probability sweep

    Attributes
    ----------
    n: int
        number of vertices
    r: int
        clique order
    p_grid: list
        strictly increasing edge probabilities in ``[0, 1]``
    trials: int
        number of graphs at each probability
    master_seed: int, default 0
        seed of the trial generators
    solver_budget: int or None, default None
        search node budget of each solver call
    delta: float, default 0.1
        cut balance slack
    alpha: float, default 0.2
        rigidity slack
    gamma: float or None, default None
        bad-pair constant
    output: str or None, default None
        path of the ``.csv`` or ``.nc`` output file
    """

    n: int
    r: int
    p_grid: list
    trials: int
    master_seed: int = 0
    solver_budget: int | None = None
    delta: float = 0.1
    alpha: float = 0.2
    gamma: float | None = None
    output: str | None = None

    def __post_init__(self):
        if np.ndim(self.p_grid) == 0:
            self.p_grid = [self.p_grid]
        self.p_grid = [float(p) for p in self.p_grid]
        if self.trials < 1:
            message = f"Number of trials must be positive: {self.trials}"
            raise ValueError(message)
        if any(not (0.0 <= p <= 1.0) for p in self.p_grid):
            raise ValueError(f"Probabilities outside [0, 1]: {self.p_grid}")
        if any(b <= a for a, b in zip(self.p_grid, self.p_grid[1:])):
            raise ValueError(f"Grid is not strictly increasing: {self.p_grid}")

    @classmethod
    def from_json(cls, config: dict | str | pathlib.Path):
        """Read a configuration from a JSON file or dictionary"""
        if not isinstance(config, dict):
            with pathlib.Path(config).open(mode="r", encoding="utf-8") as fid:
                config = json.load(fid)
        fields = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(config) - fields)
        if unknown:
            raise ValueError(f"Unknown configuration keys: {unknown}")
        return cls(**config)

    def to_json(self, filename: str | pathlib.Path | None = None) -> dict:
        """Write the configuration as JSON and return it as a dictionary"""
        config = dataclasses.asdict(self)
        if filename is not None:
            with pathlib.Path(filename).open(mode="w", encoding="utf-8") as f:
                json.dump(config, f, indent=4)
        return config

    def params(self, p: float) -> ParamSet:
        """Parameters and derived constants at a grid point"""
        return ParamSet(
            n=self.n,
            r=self.r,
            p=p,
            delta=self.delta,
            alpha=self.alpha,
            gamma=self.gamma,
        )


@dataclasses.dataclass
class SweepRow:
    """
    Equality counts at one edge probability

    Attributes
    ----------
    n: int
        number of vertices
    r: int
        clique order
    p: float
        edge probability
    trials: int
        number of sampled graphs
    equality_count: int
        graphs with ``t_r(G) = b_r(G)``
    unresolved_count: int
        graphs where a solver exhausted its budget
    equality_rate: float
        ``equality_count / (trials - unresolved_count)``
    stderr: float
        binomial standard error of the rate
    seed: int
        master seed
    """

    n: int
    r: int
    p: float
    trials: int
    equality_count: int
    unresolved_count: int
    equality_rate: float
    stderr: float
    seed: int

    @property
    def resolved(self) -> int:
        return self.trials - self.unresolved_count

    @property
    def failures(self) -> int:
        """Resolved graphs with ``t_r(G) > b_r(G)``"""
        return self.resolved - self.equality_count

    def confidence_interval(self, level: float = 0.95) -> tuple:
        """Clopper-Pearson interval of the equality rate"""
        return _interval(self.equality_count, self.resolved, level=level)

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)


def _interval(count: int, total: int, level: float = 0.95) -> tuple:
    if total == 0:
        return (0.0, 1.0)
    test = scipy.stats.binomtest(count, total)
    ci = test.proportion_ci(confidence_level=level, method="exact")
    return (float(ci.low), float(ci.high))


# PURPOSE: compare t_r and b_r on one sampled graph
def equality_trial(
    n: int, r: int, p: float, seed: int, k: int, budget: int | None = None
) -> bool | None:
    """
    Sample trial ``k`` of ``G(n,p)`` and test ``t_r(G) = b_r(G)``

    Returns
    -------
    equal: bool or None
        ``None`` when a solver exhausted its budget
    """
    G = sample_gnp(n, p, random_generator(seed, k))
    gap = turan_gap(G, r, budget=budget).gap
    return None if gap is None else (gap == 0)


# PURPOSE: estimate P(t_r(G) = b_r(G)) at one edge probability
def estimate_equality_prob(
    n: int, r: int, p: float, trials: int, seed: int = 0, **kwargs
) -> SweepRow:
    """
    Fraction of sampled graphs whose largest ``K_r``-free subgraph
    has as many edges as the largest ``(r-1)``-partite subgraph

    Parameters
    ----------
    n: int
        number of vertices
    r: int
        clique order
    p: float
        edge probability
    trials: int
        number of sampled graphs
    seed: int, default 0
        master seed
    budget: int or None, default None
        search node budget of each solver call
    threads: int, default 1
        number of worker threads
    order: list or None, default None
        evaluation order of the trial indices

    Returns
    -------
    row: SweepRow
        equality counts and rate
    """
    kwargs.setdefault("budget", None)
    kwargs.setdefault("threads", 1)
    kwargs.setdefault("order", None)
    if trials < 1:
        raise ValueError(f"Number of trials must be positive: {trials}")
    order = list(range(trials)) if kwargs["order"] is None else kwargs["order"]
    if sorted(order) != list(range(trials)):
        raise ValueError("Trial order must be a permutation of the trials")

    def trial(k: int):
        return equality_trial(n, r, p, seed, k, budget=kwargs["budget"])

    results = parallel_map(trial, order, threads=kwargs["threads"])
    unresolved = sum(1 for e in results if e is None)
    equal = sum(1 for e in results if e)
    resolved = trials - unresolved
    if resolved == 0:
        raise RuntimeError(f"All {trials} trials unresolved at p={p}")
    rate = equal / resolved
    stderr = float(np.sqrt(rate * (1.0 - rate) / resolved))
    logging.info(f"p={p:0.4f}: {equal}/{resolved} equal, {unresolved} open")
    return SweepRow(
        n=n,
        r=r,
        p=float(p),
        trials=trials,
        equality_count=equal,
        unresolved_count=unresolved,
        equality_rate=rate,
        stderr=stderr,
        seed=seed,
    )


# PURPOSE: equality probability over a grid of edge probabilities
def sweep(config: ExperimentConfig, threads: int = 1) -> xr.Dataset:
    """
    Run :func:`estimate_equality_prob` at every grid point

    Parameters
    ----------
    config: ExperimentConfig
        sweep configuration
    threads: int, default 1
        number of worker threads

    Returns
    -------
    ds: xarray.Dataset
        one row per grid point indexed by ``p``
    """
    rows = [
        estimate_equality_prob(
            config.n,
            config.r,
            p,
            config.trials,
            seed=config.master_seed,
            budget=config.solver_budget,
            threads=threads,
        )
        for p in config.p_grid
    ]
    ds = xTuran.io.dataset.from_rows(rows)
    if config.n >= 3:
        ds.attrs["threshold"] = threshold_p(config.n, config.r)
    ds.attrs["software_version"] = xTuran.version.full_version
    if config.output is not None:
        xTuran.io.write_dataset(ds, config.output)
    return ds


@dataclasses.dataclass
class BisectResult:
    """
    Bisection estimate of the edge probability at a target rate

    Attributes
    ----------
    estimate: float
        midpoint of the final bracket
    lower: float
        final lower end of the bracket
    upper: float
        final upper end of the bracket
    iterations: int
        number of bisection steps
    threshold: float or None
        ``C n^(-2/(r+1)) log(n)^(2/((r+1)(r-2)))`` with ``C = 1``
    """

    estimate: float
    lower: float
    upper: float
    iterations: int
    threshold: float | None = None

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def to_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["width"] = self.width
        return d


# PURPOSE: bisect the edge probability where equality becomes likely
def bisect_threshold(
    n: int,
    r: int,
    target_rate: float,
    trials: int,
    seed: int = 0,
    max_iters: int = 8,
    **kwargs,
) -> BisectResult:
    """
    Interval bisection for the edge probability at which the equality
    rate reaches a target

    The rate is not monotone for small ``p`` (sparse graphs are
    trivially triangle-free), so the lower end must lie above that
    regime with a rate below the target

    Parameters
    ----------
    n: int
        number of vertices
    r: int
        clique order
    target_rate: float
        target equality rate in ``(0, 1)``
    trials: int
        number of sampled graphs per evaluation
    seed: int, default 0
        master seed
    max_iters: int, default 8
        number of bisection steps
    lower: float, default 0.5
        lower end of the search interval
    upper: float, default 1.0
        upper end of the search interval
    budget: int or None, default None
        search node budget of each solver call
    threads: int, default 1
        number of worker threads
    """
    kwargs.setdefault("lower", 0.5)
    kwargs.setdefault("upper", 1.0)
    kwargs.setdefault("budget", None)
    kwargs.setdefault("threads", 1)
    if not (0.0 < target_rate < 1.0):
        raise ValueError(f"Target rate must be in (0, 1): {target_rate}")
    lower, upper = float(kwargs["lower"]), float(kwargs["upper"])
    if not (0.0 <= lower <= upper <= 1.0):
        raise ValueError(f"Invalid search interval [{lower}, {upper}]")
    threshold = threshold_p(n, r) if n >= 3 else None
    if lower == upper:
        return BisectResult(lower, lower, upper, 0, threshold)

    def rate(p: float) -> float:
        row = estimate_equality_prob(
            n,
            r,
            p,
            trials,
            seed=seed,
            budget=kwargs["budget"],
            threads=kwargs["threads"],
        )
        return row.equality_rate

    if not (rate(lower) < target_rate <= rate(upper)):
        raise ValueError(
            f"Interval [{lower}, {upper}] does not bracket rate {target_rate}"
        )
    iterations = 0
    for iterations in range(1, max_iters + 1):
        mid = 0.5 * (lower + upper)
        if rate(mid) >= target_rate:
            upper = mid
        else:
            lower = mid
    estimate = 0.5 * (lower + upper)
    logging.info(f"Bisection estimate {estimate:0.4f} (threshold {threshold})")
    return BisectResult(estimate, lower, upper, iterations, threshold)


# PURPOSE: edges whose every K_r copy passes through a given edge
def dependent_edges(G: Graph, xy: tuple, r: int) -> list:
    """
    Edges ``uv != xy`` of ``G`` lying in at least one ``K_r`` all of
    whose copies of ``K_r`` contain both ``x`` and ``y``

    Parameters
    ----------
    G: Graph
        host graph
    xy: tuple
        edge of ``G``
    r: int
        clique order
    """
    x, y = xy
    edges = []
    for u, v in G.edges:
        if {u, v} == {x, y}:
            continue
        common = G.common_neighbors((u, v))
        copies = G.cliques(r - 2, within=common)
        if copies and all({x, y} <= {u, v, *c} for c in copies):
            edges.append((u, v))
    return edges


@dataclasses.dataclass
class StoppingTimeReport:
    """
    Failures of ``t_r = b_r`` at the clique stopping time

    Attributes
    ----------
    n: int
        number of vertices
    r: int
        clique order
    trials: int
        number of runs of the process
    failures: int
        stopped graphs with ``t_r(G) > b_r(G)``
    unresolved: int
        stopped graphs where a solver exhausted its budget
    confidence_interval: tuple
        Clopper-Pearson interval of the failure rate
    examples: list
        witness records of the failures
    """

    n: int
    r: int
    trials: int
    failures: int
    unresolved: int
    confidence_interval: tuple
    examples: list

    @property
    def failure_rate(self) -> float:
        resolved = self.trials - self.unresolved
        return self.failures / resolved if resolved else float("nan")

    def to_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["confidence_interval"] = list(self.confidence_interval)
        d["failure_rate"] = self.failure_rate
        return d


def _stopping_trial(n: int, r: int, seed: int, k: int, budget, limit: int):
    process = stopping_time_process(n, r, random_generator(seed, k))
    G = process.graph
    result = turan_gap(G, r, budget=budget)
    if (result.gap is None) or (result.gap == 0):
        return (result.gap, None)
    # recheck the witness against the exhaustive (r-1)-cut
    F = G.edge_subgraph(result.kr_free.witness_edges)
    b = brute_max_partite(G, r - 1, limit=limit).value
    assert F.is_kr_free(r), f"trial {k}: K_r-free witness contains a K_r"
    assert len(F) > b, f"trial {k}: witness does not beat b_r={b}"
    example = dict(
        trial=k,
        n=n,
        edges=[list(e) for e in G.edges],
        stop_index=process.stop_index,
        last_edge=list(process.last_edge),
        t=result.t,
        b=result.b,
        gap=result.gap,
        witness_edges=[list(e) for e in F.edges],
        dependent_edges=[
            list(e) for e in dependent_edges(G, process.last_edge, r)
        ],
    )
    return (result.gap, example)


# PURPOSE: test t_r = b_r when every edge first lies in a K_r
def stopping_time_study(
    n: int, r: int, trials: int, seed: int = 0, **kwargs
) -> StoppingTimeReport:
    """
    Run the clique stopping-time process and compare ``t_r`` and
    ``b_r`` of each stopped graph

    Failures are rechecked with the exhaustive ``(r-1)``-cut

    Parameters
    ----------
    n: int
        number of vertices
    r: int
        clique order
    trials: int
        number of runs
    seed: int, default 0
        master seed
    budget: int or None, default None
        search node budget of each solver call
    threads: int, default 1
        number of worker threads
    limit: int, default 5000000
        largest number of assignments of the exhaustive cut

    Returns
    -------
    report: StoppingTimeReport
        failure counts and witnesses
    """
    kwargs.setdefault("budget", None)
    kwargs.setdefault("threads", 1)
    kwargs.setdefault("limit", 5_000_000)
    if trials < 1:
        raise ValueError(f"Number of trials must be positive: {trials}")

    def trial(k: int):
        return _stopping_trial(n, r, seed, k, kwargs["budget"], kwargs["limit"])

    results = parallel_map(trial, range(trials), threads=kwargs["threads"])
    unresolved = sum(1 for gap, _ in results if gap is None)
    examples = [example for _, example in results if example is not None]
    failures = len(examples)
    if failures == 0:
        logging.warning(f"No stopping-time failures in {trials} trials")
    ci = _interval(failures, trials - unresolved)
    logging.info(f"Stopping time: {failures} failures in {trials} trials")
    return StoppingTimeReport(
        n=n,
        r=r,
        trials=trials,
        failures=failures,
        unresolved=unresolved,
        confidence_interval=ci,
        examples=examples,
    )


@dataclasses.dataclass
class CutConjReport:
    """
    Largest share of the edges at a vertex crossing a maximum cut

    Attributes
    ----------
    n: int
        number of vertices
    p: float
        edge probability
    trials: int
        number of sampled graphs
    statistics: list
        statistic of each sampled graph
    exceed_count: int
        graphs with a statistic above 0.51
    confidence_interval: tuple
        Clopper-Pearson interval of the exceedance rate
    """

    n: int
    p: float
    trials: int
    statistics: list
    exceed_count: int
    confidence_interval: tuple

    @property
    def fraction(self) -> float:
        return self.exceed_count / self.trials

    def to_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["confidence_interval"] = list(self.confidence_interval)
        d["fraction"] = self.fraction
        return d


# PURPOSE: distribution of the maximum cut statistic over G(n,p)
def cutconj_study(
    n: int, p: float, trials: int, seed: int = 0, **kwargs
) -> CutConjReport:
    """
    Sample ``G(n,p)`` and record the largest fraction of the edges at
    a vertex that cross an ordinary maximum cut

    Parameters
    ----------
    n: int
        number of vertices
    p: float
        edge probability
    trials: int
        number of sampled graphs
    seed: int, default 0
        master seed
    threads: int, default 1
        number of worker threads
    cutoff: float, default 0.51
        reported exceedance level
    """
    kwargs.setdefault("threads", 1)
    kwargs.setdefault("cutoff", 0.51)
    if trials < 1:
        raise ValueError(f"Number of trials must be positive: {trials}")

    def trial(k: int) -> float:
        return cut_conjecture_stat(sample_gnp(n, p, random_generator(seed, k)))

    statistics = parallel_map(trial, range(trials), threads=kwargs["threads"])
    exceed = sum(1 for s in statistics if s > kwargs["cutoff"])
    logging.info(f"Max cut statistic above {kwargs['cutoff']}: {exceed}")
    return CutConjReport(
        n=n,
        p=float(p),
        trials=trials,
        statistics=statistics,
        exceed_count=exceed,
        confidence_interval=_interval(exceed, trials),
    )
