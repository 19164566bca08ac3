#!/usr/bin/env python
"""
test_io.py (03/2026)
Verify graph files and sweep result files
"""

import pytest
import numpy as np
import xarray as xr
import xTuran


# PURPOSE: test reading and writing edge-list text
def test_graph_text():
    G = xTuran.io.read_graph("3 1\n0 1\n")
    assert G.n == 3
    assert G.edges == ((0, 1),)
    K3 = xTuran.Graph.complete(3)
    assert xTuran.io.write_graph(K3) == "3 3\n0 1\n0 2\n1 2\n"
    # comments and blank lines are skipped
    text = "# triangle\n\n3 3\n1 0\n# inner\n2 0\n2 1\n"
    assert xTuran.io.read_graph(text) == K3
    commented = xTuran.io.write_graph(K3, comment="triangle")
    assert commented.startswith("# triangle\n3 3\n")
    assert xTuran.io.read_graph(commented) == K3


# PURPOSE: test malformed graph files name the failing line
@pytest.mark.parametrize(
    "TEXT, LINE",
    [
        ("3 1\n0 3\n", 2),
        ("3 1\n1 1\n", 2),
        ("3 2\n0 1\n1 0\n", 3),
        ("3 1\n0 x\n", 2),
        ("# header\n3\n", 2),
        ("3 1\n0 1 2\n", 2),
    ],
)
def test_graph_errors(TEXT, LINE):
    with pytest.raises(xTuran.io.GraphFileError) as exc:
        xTuran.io.read_graph(TEXT)
    assert exc.value.line == LINE
    assert str(exc.value).startswith(f"line {LINE}:")


# PURPOSE: test edge count mismatches and empty files
def test_graph_count_errors():
    with pytest.raises(xTuran.io.GraphFileError):
        xTuran.io.read_graph("3 2\n0 1\n")
    with pytest.raises(xTuran.io.GraphFileError):
        xTuran.io.read_graph("# nothing here\n")


# PURPOSE: test graph files on disk
def test_graph_file(tmp_path):
    G = xTuran.Graph.cycle(5)
    filename = tmp_path.joinpath("cycle.txt")
    xTuran.io.graphfile.to_file(G, filename)
    assert xTuran.io.graphfile.from_file(filename) == G


def _rows():
    # two sweep rows in the fixed column order
    return [
        dict(
            n=7,
            r=3,
            p=0.2,
            trials=10,
            equality_count=9,
            unresolved_count=1,
            equality_rate=1.0,
            stderr=0.0,
            seed=4,
        ),
        dict(
            n=7,
            r=3,
            p=0.5,
            trials=10,
            equality_count=5,
            unresolved_count=0,
            equality_rate=0.5,
            stderr=np.sqrt(0.025),
            seed=4,
        ),
    ]


# PURPOSE: test sweep datasets and CSV files
def test_sweep_csv(tmp_path):
    ds = xTuran.io.dataset.from_rows(_rows())
    assert list(ds["p"].values) == [0.2, 0.5]
    assert list(ds.turan.failures.values) == [0, 5]
    filename = tmp_path.joinpath("sweep.csv")
    xTuran.io.write_dataset(ds, filename)
    header = filename.read_text().splitlines()[0]
    assert header == ",".join(xTuran.io.dataset.COLUMNS)
    ds2 = xTuran.io.open_dataset(filename)
    df1 = ds.turan.to_dataframe()
    df2 = ds2.turan.to_dataframe()
    assert list(df2.columns) == xTuran.io.dataset.COLUMNS
    columns = ["n", "trials", "seed"]
    assert np.all(df1[columns].values == df2[columns].values)
    assert np.allclose(df1["equality_rate"], df2["equality_rate"])


# PURPOSE: test sweep files with a different header are rejected
def test_sweep_header(tmp_path):
    filename = tmp_path.joinpath("bad.csv")
    filename.write_text("n,r,p\n7,3,0.5\n")
    with pytest.raises(ValueError):
        xTuran.io.open_dataset(filename)
    with pytest.raises(ValueError):
        xTuran.io.open_dataset(tmp_path.joinpath("sweep.txt"))


# PURPOSE: test sweep validation
def test_sweep_validate():
    rows = _rows()
    rows[1]["equality_rate"] = 0.25
    with pytest.raises(ValueError):
        xTuran.io.dataset.from_rows(rows)
    rows = _rows()
    rows[0]["equality_count"] = 10
    with pytest.raises(ValueError):
        xTuran.io.dataset.from_rows(rows)
    ds = xr.Dataset(dict(n=("p", [7])), coords=dict(p=[0.5]))
    with pytest.raises(ValueError):
        ds.turan.validate()


# PURPOSE: test sweep netCDF4 files
def test_sweep_netcdf(tmp_path):
    pytest.importorskip("h5netcdf")
    ds = xTuran.io.dataset.from_rows(_rows())
    rows = _rows()
    for row in rows:
        row["p"] += 0.5
    files = [tmp_path.joinpath("low.nc"), tmp_path.joinpath("high.nc")]
    xTuran.io.write_dataset(xTuran.io.dataset.from_rows(rows), files[1])
    xTuran.io.write_dataset(ds, files[0])
    ds2 = xTuran.io.open_dataset(files[0])
    assert np.allclose(ds2["equality_rate"], ds["equality_rate"])
    combined = xTuran.io.netcdf.open_mfdataset(files[::-1])
    assert np.allclose(combined["p"], [0.2, 0.5, 0.7, 1.0])
