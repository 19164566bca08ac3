#!/usr/bin/env python
"""
dataset.py
Written by Tyler Sutterley (02/2026)
An xarray.Dataset extension for equality probability sweeps

    one row per edge probability p with the fixed CSV columns
    n,r,p,trials,equality_count,unresolved_count,equality_rate,stderr,seed

PYTHON DEPENDENCIES:
    numpy: Scientific Computing Tools For Python
        https://numpy.org
        https://numpy.org/doc/stable/user/numpy-for-matlab-users.html
    pandas: Python Data Analysis Library
        https://pandas.pydata.org/
    xarray: N-D labeled arrays and datasets in Python
        https://docs.xarray.dev/en/stable/

UPDATE HISTORY:
    Written 02/2026
"""

from __future__ import annotations

import logging
import pathlib
import numpy as np
import pandas as pd
import xarray as xr

__all__ = ["Dataset", "COLUMNS", "from_rows", "read_csv"]

# fixed column order of sweep files
COLUMNS = [
    "n",
    "r",
    "p",
    "trials",
    "equality_count",
    "unresolved_count",
    "equality_rate",
    "stderr",
    "seed",
]
# integer valued columns
_integers = ["n", "r", "trials", "equality_count", "unresolved_count", "seed"]


# PURPOSE: build a sweep dataset from rows
def from_rows(rows: list) -> xr.Dataset:
    """
    Create a sweep ``Dataset`` indexed by ``p``

    Parameters
    ----------
    rows: list
        ``SweepRow`` objects or dictionaries with the sweep columns
    """
    records = [row if isinstance(row, dict) else row.to_dict() for row in rows]
    df = pd.DataFrame.from_records(records, columns=COLUMNS)
    return _to_dataset(df)


def _to_dataset(df: pd.DataFrame) -> xr.Dataset:
    df = df.astype({c: np.int64 for c in _integers})
    df = df.astype({"p": np.float64, "equality_rate": np.float64})
    df = df.astype({"stderr": np.float64})
    ds = xr.Dataset.from_dataframe(df.set_index("p"))
    ds.turan.validate()
    return ds


# PURPOSE: read a sweep CSV file
def read_csv(filename: str | pathlib.Path, **kwargs) -> xr.Dataset:
    """
    Read a sweep CSV file with the fixed header

    Parameters
    ----------
    filename: str or pathlib.Path
        Path to CSV file
    """
    logging.debug(f"Reading sweep file: {filename}")
    df = pd.read_csv(filename, **kwargs)
    if list(df.columns) != COLUMNS:
        raise ValueError(f"Unexpected sweep header: {','.join(df.columns)}")
    return _to_dataset(df)


@xr.register_dataset_accessor("turan")
class Dataset:
    """Accessor for extending an ``xarray.Dataset`` for sweep results"""

    def __init__(self, ds):
        # initialize Dataset
        self._ds = ds

    def to_dataframe(self) -> pd.DataFrame:
        """Sweep rows in the fixed column order"""
        df = self._ds.to_dataframe().reset_index()
        return df[COLUMNS]

    def to_csv(self, filename: str | pathlib.Path):
        """
        Write the sweep rows as CSV

        Parameters
        ----------
        filename: str or pathlib.Path
            Path to output CSV file
        """
        logging.info(f"Writing sweep file: {filename}")
        self.to_dataframe().to_csv(filename, index=False, lineterminator="\n")

    def validate(self):
        """Check the sweep schema and the count identities"""
        missing = sorted(set(COLUMNS) - set(self._ds.variables))
        if missing:
            raise ValueError(f"Sweep is missing variables: {missing}")
        p = self._ds["p"].values
        if np.any(np.diff(p) <= 0):
            raise ValueError("Edge probabilities are not strictly increasing")
        trials = self._ds["trials"].values
        equal = self._ds["equality_count"].values
        unresolved = self._ds["unresolved_count"].values
        if np.any(equal + unresolved > trials):
            raise ValueError("Counts exceed the number of trials")
        rate = equal / (trials - unresolved)
        if not np.allclose(rate, self._ds["equality_rate"].values):
            raise ValueError("Equality rates disagree with the counts")
        return self._ds

    @property
    def failures(self) -> xr.DataArray:
        """Resolved graphs with ``t_r(G) > b_r(G)``"""
        ds = self._ds
        return ds["trials"] - ds["unresolved_count"] - ds["equality_count"]
