#!/usr/bin/env python
"""
verify.py
Written by Tyler Sutterley (03/2026)
Verification suites checking the solvers, counts, constants and tail
bounds against exact values, brute-force oracles and naive scans

Suites are registered by name in the ``xTuran/datasets/catalog.json``
catalog and run with :func:`verify`. Instance sizes default to values
that finish in seconds and can be raised with keyword arguments

PYTHON DEPENDENCIES:
    numpy: Scientific Computing Tools For Python
        https://numpy.org
        https://numpy.org/doc/stable/user/numpy-for-matlab-users.html
    scipy: Scientific Tools for Python
        https://docs.scipy.org/doc/

UPDATE HISTORY:
    Updated 04/2026: rigidity and stopping-time suites
    Written 03/2026
"""

from __future__ import annotations

import logging
import itertools
import dataclasses
from fractions import Fraction
import numpy as np
import xTuran.datasets
from xTuran.graph import Graph, Cut, turan_number
from xTuran.generators import sample_gnp, stopping_time_process
from xTuran.coloring import equitable_edge_coloring
from xTuran.solvers import (
    max_kr_free,
    max_partite,
    turan_gap,
    brute_max_kr_free,
    brute_max_partite,
    ilp_max_kr_free,
)
from xTuran.cuts import (
    enumerate_balanced_cuts,
    rigidity_analysis,
    crit,
    crit_by_deletion,
)
from xTuran.counts import (
    kappa,
    tau,
    sigma,
    kr_minus_family,
    delta_bar_kr_minus,
)
from xTuran.constants import abc
from xTuran.rooted import (
    h_ij,
    h_ij_subgraph,
    h_ij_density,
    varsigma,
    density,
    is_balanced,
    is_strictly_balanced,
    count_copies,
)
from xTuran.bounds import (
    TailFamily,
    family_stats,
    janson_bound,
    trw_bound,
)
from xTuran.simulate import empirical_lower_tail, exact_lower_tail
from xTuran.experiments import (
    ExperimentConfig,
    estimate_equality_prob,
    sweep,
    stopping_time_study,
)
from xTuran.utilities import random_generator

__all__ = ["VerifyReport", "SUITES", "verify"]


@dataclasses.dataclass
class VerifyReport:
    """
    Outcome of a verification suite

    Attributes
    ----------
    suite: str
        suite name
    checks: int
        number of checks evaluated
    failures: list
        messages of the failed checks
    notes: list
        reported observations that do not fail the suite
    """

    suite: str
    checks: int = 0
    failures: list = dataclasses.field(default_factory=list)
    notes: list = dataclasses.field(default_factory=list)

    @property
    def passed(self) -> bool:
        return len(self.failures) == 0

    def check(self, condition: bool, message: str) -> bool:
        """Count a check and record its message when it fails"""
        self.checks += 1
        if not condition:
            self.failures.append(message)
            logging.warning(f"{self.suite}: {message}")
        return bool(condition)

    def note(self, message: str):
        self.notes.append(message)
        logging.info(f"{self.suite}: {message}")

    def to_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["passed"] = self.passed
        return d


def _instance(seed: int, salt: int, k: int, n_range: tuple, ps: tuple):
    # random graph for instance k of a suite
    rng = random_generator(seed, salt, k)
    n = int(rng.integers(n_range[0], n_range[1] + 1))
    p = float(ps[int(rng.integers(len(ps)))])
    return sample_gnp(n, p, rng), rng


# PURPOSE: Turán's theorem on complete graphs
def _complete(report: VerifyReport, seed: int, **kwargs):
    kwargs.setdefault("max_n", 10)
    kwargs.setdefault("plain_n", 7)
    kwargs.setdefault("brute_n", 5)
    for r in (3, 4, 5):
        for n in range(3, kwargs["max_n"] + 1):
            G = Graph.complete(n)
            # search without the Turán bound on the smaller graphs
            bounded = n > kwargs["plain_n"]
            t = max_kr_free(G, r, turan_bound=bounded)
            b = max_partite(G, r - 1)
            expected = turan_number(n, r)
            report.check(
                t.value == b.value == expected,
                f"t_{r}(K_{n})={t.value}, b_{r}(K_{n})={b.value}, "
                f"expected {expected}",
            )
            if n <= kwargs["brute_n"]:
                brute = brute_max_kr_free(G, r).value
                report.check(
                    brute == t.value,
                    f"brute force t_{r}(K_{n})={brute} != {t.value}",
                )
    report.check(
        brute_max_kr_free(Graph.complete(5), 3).value == 6, "t_3(K_5) != 6"
    )
    report.check(
        brute_max_kr_free(Graph.complete(5), 4).value == 8, "t_4(K_5) != 8"
    )


# PURPOSE: branch-and-bound solvers against exhaustive search
def _oracle(report: VerifyReport, seed: int, **kwargs):
    kwargs.setdefault("instances", 200)
    kwargs.setdefault("max_n", 10)
    kwargs.setdefault("brute_n", 7)
    for k in range(kwargs["instances"]):
        G, rng = _instance(seed, 2, k, (4, kwargs["max_n"]), (0.3, 0.5, 0.7))
        r = int(rng.choice([3, 4]))
        gap = turan_gap(G, r)
        # edge subset scans are limited to small graphs
        if G.n <= kwargs["brute_n"]:
            t = brute_max_kr_free(G, r).value
        else:
            t = ilp_max_kr_free(G, r).value
        b = brute_max_partite(G, r - 1).value
        report.check(
            (gap.t, gap.b) == (t, b),
            f"instance {k} (n={G.n}, r={r}): solver ({gap.t}, {gap.b}) "
            f"!= brute force ({t}, {b})",
        )


# PURPOSE: b_r(G) >= (r-2)|G|/(r-1) on solved instances
def _observation(report: VerifyReport, seed: int, **kwargs):
    kwargs.setdefault("instances", 100)
    kwargs.setdefault("max_n", 9)
    for k in range(kwargs["instances"]):
        G, rng = _instance(seed, 3, k, (3, kwargs["max_n"]), (0.3, 0.5, 0.7))
        r = int(rng.choice([3, 4, 5]))
        b = max_partite(G, r - 1).value
        report.check(
            (r - 1) * b >= (r - 2) * G.edge_count,
            f"instance {k}: b_{r}={b} below (r-2)|G|/(r-1), |G|={len(G)}",
        )


# PURPOSE: balance, sizes and densities of the H_ij family
def _hij(report: VerifyReport, seed: int, **kwargs):
    kwargs.setdefault("max_r", 8)
    for r in range(4, kwargs["max_r"] + 1):
        for j in range(2, r):
            for i in range(1, j):
                H = h_ij(r, i, j)
                label = f"H_({i},{j}) for r={r}"
                report.check(
                    (H.v_H, H.e_H) == (j - 2, varsigma(i, j) + j - 3),
                    f"{label}: (v_H, e_H) = ({H.v_H}, {H.e_H})",
                )
                if H.v_H == 0:
                    continue
                report.check(is_balanced(H), f"{label} is not balanced")
                strict = (i, j) != (2, 4)
                report.check(
                    is_strictly_balanced(H) == strict,
                    f"{label}: strictly balanced should be {strict}",
                )
                for k in range(1, j):
                    if k == i == 1:
                        continue
                    rho = density(h_ij_subgraph(r, i, j, k))
                    report.check(
                        rho == h_ij_density(i, j, k),
                        f"{label}: rho(H[{k}]) = {rho}",
                    )


# PURPOSE: exact constants a_r < b_r
def _constants(report: VerifyReport, seed: int, **kwargs):
    kwargs.setdefault("max_r", 64)
    for r in range(4, kwargs["max_r"] + 1):
        a, b, _ = abc(r)
        report.check(a < b, f"a_{r}={a} is not below b_{r}={b}")
    F = Fraction
    report.check(abc(4) == (F(0), F(2, 9), F(1, 9)), f"r=4: {abc(4)}")
    report.check(abc(5) == (F(1, 4), F(5, 16), F(9, 32)), f"r=5: {abc(5)}")


# PURPOSE: Janson inequality on the triangles of K_4
def _janson(report: VerifyReport, seed: int, **kwargs):
    kwargs.setdefault("trials", 100_000)
    kwargs.setdefault("threads", 1)
    F = TailFamily.clique_family(4, 3)
    for a, p in enumerate((0.35, 0.5)):
        stats = family_stats(F, p)
        for b, fraction in enumerate(np.arange(1, 10) / 10.0):
            t = fraction * stats.mu
            bound = janson_bound(stats.with_t(t))
            estimate, stderr = empirical_lower_tail(
                F, p, t, kwargs["trials"], seed=(seed, 6, a, b),
                threads=kwargs["threads"],
            )
            report.check(
                estimate <= bound + 3.0 * stderr,
                f"p={p}, t={t:0.4f}: {estimate:0.5f} above {bound:0.5f}",
            )
            exact = exact_lower_tail(F, p, t)
            report.check(
                exact <= bound,
                f"p={p}, t={t:0.4f}: exact {exact:0.5f} above {bound:0.5f}",
            )


# PURPOSE: TRW bound against Janson for single inner events
def _trw(report: VerifyReport, seed: int, **kwargs):
    kwargs.setdefault("points", 100)
    for k in range(kwargs["points"]):
        rng = random_generator(seed, 7, k)
        N = int(rng.integers(3, 9))
        count = int(rng.integers(1, 6))
        subsets = [
            rng.choice(N, size=int(rng.integers(1, 4)), replace=False)
            for _ in range(count)
        ]
        p = float(rng.uniform(0.1, 0.9))
        stats = family_stats(TailFamily.flat(N, subsets), p)
        stats = stats.with_t(float(rng.uniform(0.0, 1.0)) * stats.mu)
        trw, janson = trw_bound(stats), janson_bound(stats)
        report.check(
            abs(trw - janson) <= 1e-12 * max(abs(janson), 1e-300),
            f"point {k}: TRW {trw!r} != Janson {janson!r}",
        )
        # grouped events: Theta-bar never exceeds Delta-bar
        groups = [subsets[i : i + 2] for i in range(0, count, 2)]
        stats = family_stats(TailFamily(N, groups), p)
        if stats.gamma_overlap <= stats.mu:
            t = stats.gamma_overlap
            t += float(rng.uniform(0, 1)) * (stats.mu - stats.gamma_overlap)
            stats = stats.with_t(min(t, stats.mu))
            loose = dataclasses.replace(stats, theta_bar=stats.delta_bar)
            report.check(
                trw_bound(stats) <= trw_bound(loose) * (1.0 + 1e-12),
                f"point {k}: Theta-bar bound above the Delta-bar bound",
            )


# PURPOSE: exact Delta-bar of K_r^- families against the closed form
def _newh(report: VerifyReport, seed: int, **kwargs):
    kwargs.setdefault("instances", 50)
    kwargs.setdefault("max_n", 10)
    r = 4
    for k in range(kwargs["instances"]):
        rng = random_generator(seed, 8, k)
        n = int(rng.integers(r + 1, kwargs["max_n"] + 1))
        pairs = list(itertools.combinations(range(n), 2))
        size = int(rng.integers(1, 4))
        R = [pairs[i] for i in rng.choice(len(pairs), size, replace=False)]
        p = float(rng.uniform(0.2, 0.9))
        exact, bound = delta_bar_kr_minus(n, p, r, R)
        report.check(
            exact <= bound * (1.0 + 1e-12),
            f"instance {k} (n={n}, |R|={size}): {exact:g} above {bound:g}",
        )


def _is_clique(G: Graph, vertices, missing=None) -> bool:
    # all pairs present except an optional missing pair
    for u, v in itertools.combinations(vertices, 2):
        if missing is not None and {u, v} == set(missing):
            continue
        if not G.has_edge(u, v):
            return False
    return True


def _naive_kappa(G: Graph, r: int, xy: tuple, blocks: list) -> int:
    count = 0
    if blocks:
        for choice in itertools.product(*blocks):
            count += _is_clique(G, (*xy, *choice), missing=xy)
        return count
    others = [v for v in range(G.n) if v not in xy]
    for Z in itertools.combinations(others, r - 2):
        count += _is_clique(G, (*xy, *Z), missing=xy)
    return count


def _naive_tau(G: Graph, sets: list) -> int:
    count = 0
    for choice in itertools.product(*sets):
        if len(set(choice)) == len(choice):
            count += _is_clique(G, choice)
    return count


def _naive_sigma(G: Graph, R: list, r: int) -> int:
    count = 0
    for u, v in G.edges:
        for x, y in R:
            if len({u, v, x, y}) < 4:
                continue
            others = [w for w in range(G.n) if w not in (u, v, x, y)]
            if any(
                _is_clique(G, (u, v, x, y, *W), missing=(x, y))
                for W in itertools.combinations(others, r - 4)
            ):
                count += 1
                break
    return count


def _naive_copies(H, G: Graph, anchors: tuple) -> int:
    if len(set(anchors)) != len(anchors):
        return 0
    free = [v for v in range(G.n) if v not in anchors]
    count = 0
    for image in itertools.permutations(free, H.v_H):
        mapped = dict(zip(H.roots, anchors))
        mapped.update(zip(H.non_roots, image))
        count += all(G.has_edge(mapped[u], mapped[v]) for u, v in H.inner_edges)
    return count


# PURPOSE: counting functions against naive enumeration
def _counting(report: VerifyReport, seed: int, **kwargs):
    kwargs.setdefault("instances", 100)
    kwargs.setdefault("max_n", 9)
    patterns = [h_ij(6, 1, 3), h_ij(6, 2, 4), h_ij(6, 1, 4)]
    for k in range(kwargs["instances"]):
        G, rng = _instance(seed, 9, k, (6, kwargs["max_n"]), (0.5, 0.7, 0.9))
        r = int(rng.choice([3, 4, 5]))
        labels = rng.integers(r - 1, size=G.n)
        labels[: r - 1] = np.arange(r - 1)
        parts = Cut.from_labels(labels, k=r - 1).parts
        first = [v for v in parts[0]]
        x = first[0]
        y = first[1] if len(first) > 1 else (x + 1) % G.n
        blocks = [[v for v in A if v not in (x, y)] for A in parts[1:]]
        label = f"instance {k} (n={G.n}, r={r})"
        value = kappa(G, r, [(x, y), *blocks])
        report.check(
            value == _naive_kappa(G, r, (x, y), blocks),
            f"{label}: kappa over blocks {value}",
        )
        family = kr_minus_family(G, (x, y), blocks, r=r)
        report.check(
            len(family) == value, f"{label}: |K_r^- family| {len(family)}"
        )
        value = kappa(G, r, [(x, y)])
        report.check(
            value == _naive_kappa(G, r, (x, y), []),
            f"{label}: kappa over a pair {value}",
        )
        value = tau(G, blocks)
        report.check(value == _naive_tau(G, blocks), f"{label}: tau {value}")
        value = tau(G, [range(G.n)] * 3)
        report.check(
            value == _naive_tau(G, [range(G.n)] * 3),
            f"{label}: tau over repeated sets {value}",
        )
        R = [e for e in itertools.combinations(range(G.n), 2)]
        R = [R[i] for i in rng.choice(len(R), size=3, replace=False)]
        for q in (4, 5):
            value = sigma(G, R, q)
            report.check(
                value == _naive_sigma(G, R, q), f"{label}: sigma_{q} {value}"
            )
        H = patterns[k % len(patterns)]
        anchors = tuple(int(a) for a in rng.choice(G.n, 3, replace=False))
        value = count_copies(H, G, anchors)
        report.check(
            value == _naive_copies(H, G, anchors),
            f"{label}: N(H, G; {anchors}) = {value}",
        )


# PURPOSE: rigidity fixture and the two characterizations of crit
def _rigidity(report: VerifyReport, seed: int, **kwargs):
    kwargs.setdefault("instances", 50)
    G = Graph.complete_multipartite([2, 2, 2])
    family = enumerate_balanced_cuts(6, 4, Fraction(1, 10))
    analysis = rigidity_analysis(G, family, Fraction(3, 5))
    report.check(analysis.rigid, "K_(2,2,2) is not rigid")
    core = sorted(analysis.core or [])
    report.check(core == [(0, 1), (2, 3), (4, 5)], f"core {core}")
    edges = crit(G, family)
    report.check(edges == list(G.edges), f"crit(K_(2,2,2)) = {edges}")
    for k in range(kwargs["instances"]):
        H, _ = _instance(seed, 11, k, (4, 7), (0.4, 0.6, 0.8))
        family = enumerate_balanced_cuts(H.n, 3, Fraction(1, 2))
        report.check(
            crit(H, family) == crit_by_deletion(H, family),
            f"instance {k}: crit characterizations differ",
        )


# PURPOSE: equitable edge colorings with Delta + 1 colors
def _coloring(report: VerifyReport, seed: int, **kwargs):
    kwargs.setdefault("instances", 100)
    kwargs.setdefault("max_n", 30)
    for k in range(kwargs["instances"]):
        rng = random_generator(seed, 12, k)
        n = int(rng.integers(2, kwargs["max_n"] + 1))
        G = sample_gnp(n, float(rng.uniform(0.05, 0.9)), rng)
        coloring = equitable_edge_coloring(G, G.max_degree + 1)
        report.check(
            coloring.is_proper() and coloring.covers(G),
            f"instance {k} (n={n}): coloring is not proper",
        )
        report.check(
            coloring.is_equitable(),
            f"instance {k} (n={n}): class sizes {coloring.sizes}",
        )


# PURPOSE: deterministic endpoints and reproducible sweeps
def _endpoints(report: VerifyReport, seed: int, **kwargs):
    kwargs.setdefault("trials", 10)
    kwargs.setdefault("cases", [(8, 3), (8, 4), (10, 3)])
    kwargs.setdefault("threads", 8)
    for n, r in kwargs["cases"]:
        for p in (0.0, 1.0):
            row = estimate_equality_prob(n, r, p, kwargs["trials"], seed=seed)
            report.check(
                row.equality_rate == 1.0,
                f"n={n}, r={r}, p={p}: rate {row.equality_rate}",
            )
    config = ExperimentConfig(
        n=7, r=3, p_grid=[0.5, 0.8], trials=kwargs["trials"], master_seed=seed
    )
    serial = sweep(config, threads=1).turan.to_dataframe()
    threaded = sweep(config, threads=kwargs["threads"]).turan.to_dataframe()
    report.check(serial.equals(threaded), "sweep depends on the threads")
    order = list(reversed(range(kwargs["trials"])))
    forward = estimate_equality_prob(7, 3, 0.6, kwargs["trials"], seed=seed)
    backward = estimate_equality_prob(
        7, 3, 0.6, kwargs["trials"], seed=seed, order=order
    )
    report.check(forward == backward, "trial order changes the counts")


# PURPOSE: stopping-time failures re-verified by brute force
def _stoptime(report: VerifyReport, seed: int, **kwargs):
    kwargs.setdefault("n", 15)
    kwargs.setdefault("r", 3)
    kwargs.setdefault("trials", 500)
    kwargs.setdefault("threads", 1)
    n, r = kwargs["n"], kwargs["r"]
    trivial = stopping_time_process(r, r, seed)
    gap = turan_gap(trivial.graph, r).gap
    report.check(
        (len(trivial.graph) == r * (r - 1) // 2) and (gap == 0),
        f"stopped graph on n=r={r} vertices has gap {gap}",
    )
    study = stopping_time_study(
        n, r, kwargs["trials"], seed=seed, threads=kwargs["threads"]
    )
    for example in study.examples:
        G = Graph.from_edges(example["n"], example["edges"])
        F = Graph.from_edges(example["n"], example["witness_edges"])
        b = brute_max_partite(G, r - 1).value
        report.check(
            F.is_kr_free(r) and (len(F) > b) and (example["b"] == b),
            f"trial {example['trial']}: witness does not re-verify",
        )
    low, high = study.confidence_interval
    report.note(
        f"{study.failures} failures in {study.trials} trials "
        f"(n={n}, r={r}), interval [{low:0.4f}, {high:0.4f}]"
    )
    if study.failures == 0:
        report.note("no failures observed, inspect a larger run")


# verification suites by catalog name
SUITES = dict(
    complete=_complete,
    oracle=_oracle,
    observation=_observation,
    hij=_hij,
    constants=_constants,
    janson=_janson,
    trw=_trw,
    newh=_newh,
    counting=_counting,
    rigidity=_rigidity,
    coloring=_coloring,
    endpoints=_endpoints,
    stoptime=_stoptime,
)


# PURPOSE: run a named verification suite
def verify(suite: str, seed: int = 0, **kwargs) -> VerifyReport:
    """
    Run a verification suite

    Parameters
    ----------
    suite: str
        suite name (see :func:`xTuran.datasets.suites`)
    seed: int, default 0
        master seed of the random instances
    **kwargs: dict
        instance sizes and counts of the suite

    Returns
    -------
    report: VerifyReport
        number of checks and failure messages
    """
    known = xTuran.datasets.suites()
    if (suite not in known) or (suite not in SUITES):
        raise ValueError(f"Unknown suite {suite!r}, known: {known}")
    logging.info(f"Running verification suite: {suite}")
    report = VerifyReport(suite=suite)
    SUITES[suite](report, seed, **kwargs)
    status = "passed" if report.passed else "FAILED"
    logging.info(f"{suite}: {report.checks} checks {status}")
    return report
