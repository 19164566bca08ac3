#!/usr/bin/env python
"""
cli.py
Written by Tyler Sutterley (03/2026)
Command line interface for sampling graphs, solving t_r and b_r,
running equality sweeps and studies, evaluating tail bounds and
running the verification suites

COMMAND LINE OPTIONS:
    --seed X: master seed of the random streams
    --threads X: number of worker threads
    --json: print results as JSON
    -V, --verbose: output module information for process
    --debug: output debugging information
    --version: print the version of xTuran

SUBCOMMANDS:
    sample: sample G(n,p), G(n,M) or the clique stopping-time process
    solve: compute t_r(G), b_r(G) and their gap for a graph file
    sweep: equality probability over a grid of edge probabilities
    bisect: edge probability at which equality reaches a target rate
    stoptime: t_r and b_r at the clique stopping time
    cutconj: share of the edges at a vertex crossing a maximum cut
    bounds: evaluate a tail bound
    verify: run verification suites

PYTHON DEPENDENCIES:
    numpy: Scientific Computing Tools For Python
        https://numpy.org
        https://numpy.org/doc/stable/user/numpy-for-matlab-users.html

UPDATE HISTORY:
    Updated 04/2026: added verify and bounds subcommands
        added version flag
    Written 03/2026
"""

from __future__ import annotations

import sys
import json
import logging
import argparse
import xTuran.io
import xTuran.bounds
import xTuran.datasets
import xTuran.experiments
import xTuran.generators
import xTuran.solvers
import xTuran.verify
import xTuran.version
from xTuran.utilities import convert_arg_line_to_args

__all__ = ["arguments", "main"]


def _print(obj, as_json: bool, text: str | None = None):
    if as_json:
        print(json.dumps(obj, indent=4, default=str))
    else:
        print(text if text is not None else obj)


# PURPOSE: sample a random graph
def sample(args) -> int:
    if args.model == "gnp":
        G = xTuran.generators.sample_gnp(args.n, args.p, args.seed)
        comment = f"G(n={args.n}, p={args.p}) seed={args.seed}"
    elif args.model == "gnm":
        G = xTuran.generators.sample_gnm(args.n, args.m, args.seed)
        comment = f"G(n={args.n}, M={args.m}) seed={args.seed}"
    else:
        process = xTuran.generators.stopping_time_process(
            args.n, args.r, args.seed
        )
        G = process.graph
        comment = f"stopping time of K_{args.r} after {process.stop_index}"
    if args.output is not None:
        xTuran.io.graphfile.to_file(G, args.output, comment=comment)
        return 0
    _print(G.to_dict(), args.json, xTuran.io.write_graph(G, comment))
    return 0


# PURPOSE: compute t_r(G) and b_r(G) of a graph file
def solve(args) -> int:
    G = xTuran.io.graphfile.from_file(args.graph)
    if args.oracle:
        t = xTuran.solvers.brute_max_kr_free(G, args.r)
        b = xTuran.solvers.brute_max_partite(G, args.r - 1)
        gap = t.value - b.value
    else:
        result = xTuran.solvers.turan_gap(G, args.r, budget=args.budget)
        t, b, gap = result.kr_free, result.partite, result.gap
    output = dict(n=G.n, r=args.r, t=t.to_dict(), b=b.to_dict(), gap=gap)
    text = f"t_{args.r}={t.value} b_{args.r}={b.value} gap={gap}"
    _print(output, args.json, text)
    return 0


# PURPOSE: run an equality probability sweep
def sweep(args) -> int:
    if args.config is not None:
        config = xTuran.experiments.ExperimentConfig.from_json(args.config)
    else:
        config = xTuran.experiments.ExperimentConfig(
            n=args.n,
            r=args.r,
            p_grid=args.p,
            trials=args.trials,
            master_seed=args.seed,
            solver_budget=args.budget,
        )
    if args.output is not None:
        config.output = args.output
    ds = xTuran.experiments.sweep(config, threads=args.threads)
    df = ds.turan.to_dataframe()
    if args.json:
        _print(df.to_dict(orient="records"), True)
    elif config.output is None:
        df.to_csv(sys.stdout, index=False, lineterminator="\n")
    return 0


# PURPOSE: bisect the equality threshold
def bisect(args) -> int:
    result = xTuran.experiments.bisect_threshold(
        args.n,
        args.r,
        args.target,
        args.trials,
        seed=args.seed,
        max_iters=args.max_iters,
        lower=args.lower,
        upper=args.upper,
        budget=args.budget,
        threads=args.threads,
    )
    text = f"{result.estimate:0.6f} [{result.lower:0.6f}, {result.upper:0.6f}]"
    _print(result.to_dict(), args.json, text)
    return 0


# PURPOSE: stopping-time study
def stoptime(args) -> int:
    report = xTuran.experiments.stopping_time_study(
        args.n,
        args.r,
        args.trials,
        seed=args.seed,
        budget=args.budget,
        threads=args.threads,
    )
    low, high = report.confidence_interval
    text = (
        f"{report.failures} failures in {report.trials} trials "
        f"({report.unresolved} unresolved) [{low:0.4f}, {high:0.4f}]"
    )
    _print(report.to_dict(), args.json, text)
    return 0


# PURPOSE: maximum cut statistic study
def cutconj(args) -> int:
    report = xTuran.experiments.cutconj_study(
        args.n,
        args.p,
        args.trials,
        seed=args.seed,
        threads=args.threads,
        cutoff=args.cutoff,
    )
    low, high = report.confidence_interval
    text = (
        f"{report.exceed_count}/{report.trials} above {args.cutoff} "
        f"[{low:0.4f}, {high:0.4f}]"
    )
    _print(report.to_dict(), args.json, text)
    return 0


# tail bounds of the bounds subcommand
_bounds = ("chernoff-upper", "chernoff-lower", "janson", "trw", "weighted")


# PURPOSE: evaluate a tail bound
def bounds(args) -> int:
    if args.kind == "chernoff-upper":
        value = xTuran.bounds.chernoff_upper(args.mu, args.lam)
    elif args.kind == "chernoff-lower":
        value = xTuran.bounds.chernoff_lower(args.mu, args.lam)
    elif args.kind == "weighted":
        value = xTuran.bounds.weighted_bernoulli_bound(
            args.psi, args.lam, args.eta, args.z
        )
    else:
        if args.family is not None:
            F = xTuran.bounds.TailFamily.from_json(args.family)
            stats = xTuran.bounds.family_stats(F, args.p)
        else:
            theta = args.delta_bar if args.theta_bar is None else args.theta_bar
            stats = xTuran.bounds.TailBoundInput(
                mu=args.mu,
                delta_bar=args.delta_bar,
                theta_bar=theta,
                gamma_overlap=args.gamma_overlap,
            )
        stats = stats.with_t(args.t)
        if args.kind == "janson":
            value = xTuran.bounds.janson_bound(stats)
        else:
            value = xTuran.bounds.trw_bound(stats, refined=args.refined)
    _print(dict(kind=args.kind, bound=value), args.json, repr(value))
    return 0


# PURPOSE: run verification suites
def verify(args) -> int:
    names = xTuran.datasets.suites() if args.suite == "all" else [args.suite]
    # worker threads for the suites that sample in parallel
    kwargs = dict(threads=args.threads) if (args.threads > 1) else {}
    reports = [
        xTuran.verify.verify(name, seed=args.seed, **kwargs) for name in names
    ]
    if args.json:
        _print([report.to_dict() for report in reports], True)
    else:
        for report in reports:
            status = "PASS" if report.passed else "FAIL"
            print(f"{report.suite}: {status} ({report.checks} checks)")
            for message in report.failures + report.notes:
                print(f"    {message}")
    return 0 if all(report.passed for report in reports) else 1


# PURPOSE: create argument parser
def arguments():
    parser = argparse.ArgumentParser(
        description="""Exact solvers, counts, tail bounds and seeded
            experiments for the largest K_r-free subgraphs of random graphs
            """,
        fromfile_prefix_chars="@",
    )
    parser.convert_arg_line_to_args = convert_arg_line_to_args
    # command line parameters
    parser.add_argument(
        "--seed", type=int, default=0, help="Master seed of random streams"
    )
    parser.add_argument(
        "--threads", type=int, default=1, help="Number of worker threads"
    )
    parser.add_argument(
        "--json", default=False, action="store_true", help="Output JSON"
    )
    # verbose will output information about each run
    parser.add_argument(
        "--verbose",
        "-V",
        default=False,
        action="store_true",
        help="Verbose output of run",
    )
    parser.add_argument(
        "--debug", default=False, action="store_true", help="Debug output"
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"%(prog)s {xTuran.version.full_version}",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    # sample a random graph
    sub = subparsers.add_parser("sample", help="Sample a random graph")
    sub.add_argument(
        "--model",
        choices=("gnp", "gnm", "stoptime"),
        default="gnp",
        help="Random graph model",
    )
    sub.add_argument(
        "--n", "-n", type=int, required=True, help="Number of vertices"
    )
    sub.add_argument(
        "--p", "-p", type=float, default=0.5, help="Edge probability"
    )
    sub.add_argument(
        "--m", "-m", type=int, default=0, help="Number of edges of G(n,M)"
    )
    sub.add_argument(
        "--r", "-r", type=int, default=3, help="Clique order of the process"
    )
    sub.add_argument("--output", "-O", default=None, help="Output graph file")
    sub.set_defaults(func=sample)
    # solve a graph file
    sub = subparsers.add_parser("solve", help="Compute t_r and b_r")
    sub.add_argument("graph", help="Input graph file")
    sub.add_argument("--r", "-r", type=int, default=3, help="Clique order")
    sub.add_argument(
        "--budget", type=int, default=None, help="Search node budget"
    )
    sub.add_argument(
        "--oracle",
        default=False,
        action="store_true",
        help="Use the brute-force oracles",
    )
    sub.set_defaults(func=solve)
    # equality probability sweep
    sub = subparsers.add_parser("sweep", help="Equality probability sweep")
    sub.add_argument(
        "--config", "-C", default=None, help="JSON experiment configuration"
    )
    sub.add_argument("--n", "-n", type=int, help="Number of vertices")
    sub.add_argument("--r", "-r", type=int, default=3, help="Clique order")
    sub.add_argument(
        "--p", "-p", type=float, nargs="+", help="Edge probabilities"
    )
    sub.add_argument(
        "--trials", "-T", type=int, default=100, help="Graphs at each p"
    )
    sub.add_argument(
        "--budget", type=int, default=None, help="Search node budget"
    )
    sub.add_argument(
        "--output", "-O", default=None, help="Output .csv or .nc file"
    )
    sub.set_defaults(func=sweep)
    # threshold bisection
    sub = subparsers.add_parser("bisect", help="Bisect the threshold")
    sub.add_argument(
        "--n", "-n", type=int, required=True, help="Number of vertices"
    )
    sub.add_argument("--r", "-r", type=int, default=3, help="Clique order")
    sub.add_argument(
        "--target", type=float, default=0.5, help="Target equality rate"
    )
    sub.add_argument(
        "--trials", "-T", type=int, default=100, help="Graphs at each p"
    )
    sub.add_argument(
        "--max-iters", type=int, default=8, help="Number of bisection steps"
    )
    sub.add_argument(
        "--lower", type=float, default=0.5, help="Lower end of the interval"
    )
    sub.add_argument(
        "--upper", type=float, default=1.0, help="Upper end of the interval"
    )
    sub.add_argument(
        "--budget", type=int, default=None, help="Search node budget"
    )
    sub.set_defaults(func=bisect)
    # stopping-time study
    sub = subparsers.add_parser("stoptime", help="Stopping-time study")
    sub.add_argument(
        "--n", "-n", type=int, required=True, help="Number of vertices"
    )
    sub.add_argument("--r", "-r", type=int, default=3, help="Clique order")
    sub.add_argument(
        "--trials", "-T", type=int, default=100, help="Number of runs"
    )
    sub.add_argument(
        "--budget", type=int, default=None, help="Search node budget"
    )
    sub.set_defaults(func=stoptime)
    # maximum cut statistic
    sub = subparsers.add_parser("cutconj", help="Maximum cut statistic")
    sub.add_argument(
        "--n", "-n", type=int, required=True, help="Number of vertices"
    )
    sub.add_argument(
        "--p", "-p", type=float, default=0.5, help="Edge probability"
    )
    sub.add_argument(
        "--trials", "-T", type=int, default=100, help="Number of graphs"
    )
    sub.add_argument(
        "--cutoff", type=float, default=0.51, help="Reported exceedance"
    )
    sub.set_defaults(func=cutconj)
    # tail bounds
    sub = subparsers.add_parser("bounds", help="Evaluate a tail bound")
    sub.add_argument(
        "kind",
        choices=_bounds,
        help="Tail bound",
    )
    sub.add_argument("--mu", type=float, default=0.0, help="Mean")
    sub.add_argument("--lam", type=float, default=0.0, help="Deviation")
    sub.add_argument(
        "--t", "-t", type=float, default=0.0, help="Lower tail deviation"
    )
    sub.add_argument(
        "--delta-bar", type=float, default=0.0, help="Delta-bar of the family"
    )
    sub.add_argument(
        "--theta-bar", type=float, default=None, help="Theta-bar of the family"
    )
    sub.add_argument(
        "--gamma-overlap",
        type=float,
        default=0.0,
        help="Overlap of the inner events of one outer event",
    )
    sub.add_argument(
        "--family", default=None, help="JSON event family for exact statistics"
    )
    sub.add_argument(
        "--p", "-p", type=float, default=0.5, help="Inclusion probability"
    )
    sub.add_argument(
        "--refined",
        default=False,
        action="store_true",
        help="Refined TRW exponent",
    )
    sub.add_argument(
        "--psi", type=float, default=0.0, help="Mean of the weighted sum"
    )
    sub.add_argument(
        "--eta", type=float, default=0.0, help="Relative deviation"
    )
    sub.add_argument("--z", type=float, default=1.0, help="Largest weight")
    sub.set_defaults(func=bounds)
    # verification suites
    sub = subparsers.add_parser("verify", help="Run verification suites")
    sub.add_argument(
        "suite", choices=(*xTuran.datasets.suites(), "all"), help="Suite name"
    )
    sub.set_defaults(func=verify)
    # return the parser
    return parser


# This is the main part of the program that calls the individual functions
def main(argv: list | None = None) -> int:
    # Read the system arguments listed after the program name
    parser = arguments()
    args = parser.parse_args(argv)
    # create logger
    loglevel = logging.INFO if args.verbose else logging.CRITICAL
    if args.debug:
        loglevel = logging.DEBUG
    logging.basicConfig(level=loglevel)
    # validate options of the subcommand
    if (args.command == "sweep") and (args.config is None):
        if (args.n is None) or (args.p is None):
            parser.error("sweep requires --config or both --n and --p")
    # run the subcommand
    return args.func(args)


# run main program
if __name__ == "__main__":
    sys.exit(main())
