#!/usr/bin/env python
"""
netcdf.py
Written by Tyler Sutterley (02/2026)

Reads and writes sweep results as netCDF4 files

PYTHON DEPENDENCIES:
    h5netcdf: Python interface to HDF5 and netCDF4
        https://pypi.org/project/h5netcdf/
    xarray: N-D labeled arrays and datasets in Python
        https://docs.xarray.dev/en/stable/

UPDATE HISTORY:
    Written 02/2026
"""

from __future__ import division, annotations

import pathlib
import logging
import xarray as xr
import xTuran.utilities

# attempt imports
dask = xTuran.utilities.import_dependency("dask")
dask_available = xTuran.utilities.dependency_available("dask")


# PURPOSE: read a list of files
def open_mfdataset(filename: list[str] | list[pathlib.Path], **kwargs):
    """
    Open multiple netCDF4 sweep files

    Parameters
    ----------
    filename: list of str or pathlib.Path
        list of files
    parallel: bool, default False
        Open files in parallel using ``dask.delayed``
    **kwargs: dict
        additional keyword arguments for opening files
    Returns
    -------
    ds: xarray.Dataset
        xarray Dataset
    """
    # set default keyword arguments
    kwargs.setdefault("parallel", False)
    parallel = kwargs.pop("parallel") and dask_available
    # read each file as xarray dataset and append to list
    if parallel:
        opener = dask.delayed(open_dataset)
        (d,) = dask.compute([opener(f, **kwargs) for f in filename])
    else:
        d = [open_dataset(f, **kwargs) for f in filename]
    # concatenate sweeps along the edge probability
    ds = xr.concat(d, dim="p").sortby("p")
    ds.turan.validate()
    return ds


def open_dataset(filename: str | pathlib.Path, **kwargs) -> xr.Dataset:
    """Open a netCDF4 sweep file as an xarray Dataset

    Parameters
    ----------
    filename: str or pathlib.Path
        Path to netCDF4 file

    Returns
    -------
    ds: xr.Dataset
        xarray Dataset
    """
    # verbose logging
    logging.debug(f"Opening netCDF4 file: {filename}")
    # open the netCDF4 file using xarray and load into memory
    with xr.open_dataset(filename, engine="h5netcdf", **kwargs) as tmp:
        ds = tmp.load()
    ds.turan.validate()
    return ds


def to_netcdf(ds: xr.Dataset, filename: str | pathlib.Path):
    """Write a sweep as a netCDF4 file

    Parameters
    ----------
    ds: xr.Dataset
        sweep result
    filename: str or pathlib.Path
        Path to output netCDF4 file
    """
    logging.info(f"Writing netCDF4 file: {filename}")
    ds.to_netcdf(filename, engine="h5netcdf")
