"""
Input/output functions for graphs and experiment results
"""

from __future__ import annotations

import pathlib
import xarray as xr
from . import dataset
from . import netcdf
from . import graphfile
from .graphfile import GraphFileError, read_graph, write_graph

# file suffixes of netCDF4 files
_netcdf = (".nc", ".nc4", ".h5", ".hdf5")


def open_dataset(
    filename: str | pathlib.Path,
    format: str | None = None,
    **kwargs,
) -> xr.Dataset:
    """Open a sweep result file as an xarray Dataset

    Parameters
    ----------
    filename: str or pathlib.Path
        Path to file
    format: str or None, default None
        File format of the results

        - ``'csv'``: comma-separated values
        - ``'netCDF4'``: netCDF4 file
        - ``None``: infer from file extension
    **kwargs: dict
        additional keyword arguments for opening files

    Returns
    -------
    ds: xr.Dataset
        xarray Dataset
    """
    if format == "csv" or pathlib.Path(filename).suffix == ".csv":
        return dataset.read_csv(filename, **kwargs)
    elif format == "netCDF4" or pathlib.Path(filename).suffix in _netcdf:
        return netcdf.open_dataset(filename, **kwargs)
    raise ValueError(f"Unknown result format for {filename}")


def write_dataset(
    ds: xr.Dataset,
    filename: str | pathlib.Path,
    format: str | None = None,
):
    """Write a sweep result as CSV or netCDF4

    Parameters
    ----------
    ds: xr.Dataset
        sweep result
    filename: str or pathlib.Path
        Path to output file
    format: str or None, default None
        ``'csv'``, ``'netCDF4'`` or ``None`` to infer from the extension
    """
    if format == "csv" or pathlib.Path(filename).suffix == ".csv":
        ds.turan.to_csv(filename)
    elif format == "netCDF4" or pathlib.Path(filename).suffix in _netcdf:
        netcdf.to_netcdf(ds, filename)
    else:
        raise ValueError(f"Unknown result format for {filename}")
