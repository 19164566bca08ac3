#!/usr/bin/env python
"""
test_experiments.py (04/2026)
Verify equality sweeps, bisection and the stopping-time study
"""

import pytest
import numpy as np
import xTuran
from xTuran.experiments import (
    ExperimentConfig,
    equality_trial,
    estimate_equality_prob,
    sweep,
    bisect_threshold,
    dependent_edges,
    stopping_time_study,
    cutconj_study,
)


# PURPOSE: test equality rates at the endpoint probabilities
@pytest.mark.parametrize("P", [0.0, 1.0])
@pytest.mark.parametrize("R", [3, 4])
def test_endpoints(P, R):
    row = estimate_equality_prob(8, R, P, 10, seed=3)
    assert row.equality_rate == 1.0
    assert row.equality_count == 10
    assert row.unresolved_count == 0
    assert row.stderr == 0.0
    assert row.failures == 0
    low, high = row.confidence_interval()
    assert low < 1.0 and high == 1.0


# PURPOSE: test rows do not depend on the trial order or threads
def test_determinism():
    kwargs = dict(seed=11)
    row = estimate_equality_prob(7, 3, 0.6, 12, **kwargs)
    order = list(range(12))[::-1]
    assert estimate_equality_prob(7, 3, 0.6, 12, order=order, **kwargs) == row
    threaded = estimate_equality_prob(7, 3, 0.6, 12, threads=4, **kwargs)
    assert threaded == row
    # each trial is reproducible on its own
    assert equality_trial(7, 3, 0.6, 11, 5) == equality_trial(7, 3, 0.6, 11, 5)
    with pytest.raises(ValueError):
        estimate_equality_prob(7, 3, 0.6, 3, order=[0, 1, 1])
    with pytest.raises(ValueError):
        estimate_equality_prob(7, 3, 0.6, 0)


# PURPOSE: test sweep configurations
def test_config(tmp_path):
    config = ExperimentConfig(n=7, r=3, p_grid=[0.5, 0.8], trials=5)
    filename = tmp_path.joinpath("config.json")
    config.to_json(filename)
    assert ExperimentConfig.from_json(filename) == config
    assert config.params(0.5).to_dict()["n"] == 7
    with pytest.raises(ValueError):
        ExperimentConfig.from_json(dict(n=7, r=3, p_grid=[0.5], trials=5, q=1))
    with pytest.raises(ValueError):
        ExperimentConfig(n=7, r=3, p_grid=[0.8, 0.5], trials=5)
    with pytest.raises(ValueError):
        ExperimentConfig(n=7, r=3, p_grid=[0.5, 1.5], trials=5)
    assert ExperimentConfig(n=7, r=3, p_grid=0.5, trials=5).p_grid == [0.5]


# PURPOSE: test sweeps over a probability grid
def test_sweep(tmp_path):
    output = tmp_path.joinpath("sweep.csv")
    config = ExperimentConfig(
        n=7, r=3, p_grid=[0.5, 0.8], trials=5, master_seed=2,
        output=str(output),
    )
    ds = sweep(config)
    assert list(ds["p"].values) == [0.5, 0.8]
    assert np.all(ds["trials"].values == 5)
    assert ds.attrs["threshold"] == pytest.approx(
        xTuran.constants.threshold_p(7, 3)
    )
    assert ds.attrs["software_version"] == xTuran.version.full_version
    df = ds.turan.to_dataframe()
    assert df.equals(sweep(config, threads=4).turan.to_dataframe())
    assert output.exists()
    ds2 = xTuran.io.open_dataset(output)
    assert np.allclose(ds2["equality_rate"], ds["equality_rate"])


# PURPOSE: test bisection edge cases
def test_bisect():
    result = bisect_threshold(6, 3, 0.5, 4, lower=1.0, upper=1.0)
    assert result.estimate == 1.0
    assert result.iterations == 0
    assert result.width == 0.0
    with pytest.raises(ValueError):
        bisect_threshold(6, 3, 1.0, 4)
    with pytest.raises(ValueError):
        bisect_threshold(6, 3, 0.5, 4, lower=0.8, upper=0.2)
    # the rate is one at both ends so nothing is bracketed
    with pytest.raises(ValueError):
        bisect_threshold(6, 3, 0.5, 4, lower=0.0, upper=1.0)


# PURPOSE: test edges whose K_r copies all pass through an edge
def test_dependent_edges():
    K3 = xTuran.Graph.complete(3)
    assert dependent_edges(K3, (0, 1), 3) == [(0, 2), (1, 2)]
    assert dependent_edges(xTuran.Graph.complete(4), (0, 1), 3) == []


# PURPOSE: test the stopping-time study
def test_stopping_time_study():
    report = stopping_time_study(3, 3, 5, seed=1)
    assert report.failures == 0 and report.unresolved == 0
    assert report.failure_rate == 0.0
    assert report.confidence_interval[0] == 0.0
    report = stopping_time_study(7, 3, 10, seed=1)
    assert report.trials == 10
    assert len(report.examples) == report.failures
    for example in report.examples:
        assert example["gap"] > 0
        assert example["t"] == len(example["witness_edges"])
    assert set(report.to_dict().keys()) >= {"failure_rate", "examples"}


# PURPOSE: test the maximum cut statistic study
def test_cutconj_study():
    report = cutconj_study(6, 0.0, 5, seed=1)
    assert report.statistics == [0.0] * 5
    assert report.exceed_count == 0 and report.fraction == 0.0
    report = cutconj_study(2, 1.0, 3, seed=1)
    assert report.statistics == [1.0] * 3
    assert report.fraction == 1.0
    report = cutconj_study(8, 0.5, 6, seed=1, cutoff=0.0)
    assert all(0.5 <= s <= 1.0 for s in report.statistics)
