#!/usr/bin/env python
"""
utilities.py
Written by Tyler Sutterley (01/2026)
Seeding, bitset, rational arithmetic and dependency utilities

PYTHON DEPENDENCIES:
    numpy: Scientific Computing Tools For Python
        https://numpy.org
        https://numpy.org/doc/stable/user/numpy-for-matlab-users.html

UPDATE HISTORY:
    Updated 04/2026: draw fresh entropy for unseeded streams
    Updated 03/2026: added worker pool mapping with optional dask
    Written 01/2026
"""

from __future__ import annotations

import re
import math
import inspect
import logging
import pathlib
import importlib
import importlib.metadata
import importlib.util
import numpy as np
from fractions import Fraction

__all__ = [
    "reify",
    "get_data_path",
    "import_dependency",
    "dependency_available",
    "convert_arg_line_to_args",
    "master_seed",
    "random_generator",
    "as_rational",
    "popcount",
    "iter_bits",
    "pair_count",
    "pair_index",
    "pair_from_index",
    "falling_factorial",
    "parallel_map",
]


class reify(object):
    """Class decorator that puts the result of the method it
    decorates into the instance"""

    def __init__(self, wrapped):
        self.wrapped = wrapped
        self.__name__ = wrapped.__name__
        self.__doc__ = wrapped.__doc__

    def __get__(self, inst, objtype=None):
        if inst is None:
            return self
        val = self.wrapped(inst)
        setattr(inst, self.wrapped.__name__, val)
        return val


# PURPOSE: get absolute path within a package from a relative path
def get_data_path(relpath: list | str | pathlib.Path):
    """
    Get the absolute path within a package from a relative path

    Parameters
    ----------
    relpath: list, str or pathlib.Path
        relative path
    """
    # current file path
    filename = inspect.getframeinfo(inspect.currentframe()).filename
    filepath = pathlib.Path(filename).absolute().parent
    if isinstance(relpath, list):
        # use *splat operator to extract from list
        return filepath.joinpath(*relpath)
    elif isinstance(relpath, (str, pathlib.Path)):
        return filepath.joinpath(relpath)


def import_dependency(
    name: str, extra: str = "", raise_exception: bool = False
):
    """
    Import an optional dependency

    Adapted from ``pandas.compat._optional::import_optional_dependency``

    Parameters
    ----------
    name: str
        Module name
    extra: str, default ""
        Additional text to include in the ``ImportError`` message
    raise_exception: bool, default False
        Raise an ``ImportError`` if the module is not found

    Returns
    -------
    module: obj
        Imported module
    """
    # check if the module name is a string
    msg = f"Invalid module name: '{name}'; must be a string"
    assert isinstance(name, str), msg
    # default error if module cannot be imported
    err = f"Missing optional dependency '{name}'. {extra}"
    module = type("module", (), {})
    # try to import the module
    try:
        module = importlib.import_module(name)
    except (ImportError, ModuleNotFoundError) as exc:
        if raise_exception:
            raise ImportError(err) from exc
        else:
            logging.debug(err)
    # return the module
    return module


def dependency_available(name: str, minversion: str | None = None):
    """
    Checks whether a module is installed without importing it

    Adapted from ``xarray.namedarray.utils.module_available``

    Parameters
    ----------
    name: str
        Module name
    minversion : str, optional
        Minimum version of the module

    Returns
    -------
    available : bool
        Whether the module is installed
    """
    # check if module is available
    if importlib.util.find_spec(name) is None:
        return False
    # check if the version is greater than the minimum required
    if minversion is not None:
        version = importlib.metadata.version(name)
        return version >= minversion
    # return if both checks are passed
    return True


# attempt imports
dask = import_dependency("dask")
dask_available = dependency_available("dask")


# PURPOSE: argument parser for files containing command-line arguments
def convert_arg_line_to_args(arg_line):
    """
    Convert file lines to arguments

    Parameters
    ----------
    arg_line: str
        line string containing a single argument and/or comments
    """
    # remove commented lines and after argument comments
    for arg in re.sub(r"\#(.*?)$", r"", arg_line).split():
        if not arg.strip():
            continue
        yield arg


# PURPOSE: resolve a master seed
def master_seed(seed: int | tuple | list | None = None):
    """
    Master seed of a run, with fresh operating system entropy when
    ``seed`` is None

    Parameters
    ----------
    seed: int, tuple, list or None
        master seed or sequence of seed words
    """
    if seed is None:
        return int(np.random.SeedSequence().entropy)
    return seed


# PURPOSE: build a seeded random number generator
def random_generator(
    seed: int | tuple | list | np.random.Generator | None = None,
    *keys: int,
) -> np.random.Generator:
    """
    Create a counter-based random number generator

    Streams for trial ``k`` of an experiment are keyed by
    ``(master_seed, k)`` so that serial and parallel runs draw
    identical values

    Parameters
    ----------
    seed: int, tuple, list, np.random.Generator or None
        master seed, sequence of seed words or existing generator
    *keys: int
        additional words appended to the seed (e.g. trial index)

    Returns
    -------
    rng: np.random.Generator
        ``Philox`` generator for the seed sequence
    """
    if isinstance(seed, np.random.Generator):
        return seed
    if seed is None:
        entropy = [master_seed(None)] + [int(k) for k in keys]
    elif isinstance(seed, (tuple, list)):
        entropy = [int(s) for s in seed] + [int(k) for k in keys]
    else:
        entropy = [int(seed)] + [int(k) for k in keys]
    if any(e < 0 for e in entropy):
        raise ValueError(f"Seed words must be nonnegative: {entropy}")
    sequence = np.random.SeedSequence(entropy)
    return np.random.Generator(np.random.Philox(sequence))


# PURPOSE: convert a number to an exact rational
def as_rational(value: int | float | str | Fraction) -> Fraction:
    """
    Convert a number to an exact ``Fraction``

    Floats are converted through their shortest decimal
    representation so that ``0.1`` becomes ``1/10``

    Parameters
    ----------
    value: int, float, str or Fraction
        number to convert
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, (float, np.floating)):
        if not math.isfinite(value):
            raise ValueError(f"Cannot convert {value} to a rational")
        return Fraction(repr(float(value)))
    return Fraction(value)


def popcount(mask: int) -> int:
    """Number of set bits of an integer bitset"""
    return bin(mask).count("1")


def iter_bits(mask: int):
    """Yield the indices of the set bits of an integer bitset"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def pair_count(n: int) -> int:
    """Number of unordered vertex pairs of an ``n`` vertex graph"""
    return n * (n - 1) // 2


# PURPOSE: lexicographic index of the pair (u, v)
def pair_index(n: int, u: int, v: int) -> int:
    """
    Lexicographic index of the pair ``{u, v}``

    Parameters
    ----------
    n: int
        number of vertices
    u: int
        first vertex
    v: int
        second vertex
    """
    if u > v:
        u, v = v, u
    return u * n - u * (u + 1) // 2 + (v - u - 1)


# PURPOSE: pair (u, v) at a lexicographic index
def pair_from_index(n: int, index: int) -> tuple[int, int]:
    """
    Invert :func:`pair_index`

    Parameters
    ----------
    n: int
        number of vertices
    index: int
        lexicographic pair index

    Returns
    -------
    u: int
        smaller vertex
    v: int
        larger vertex
    """
    N = pair_count(n)
    if not (0 <= index < N):
        raise ValueError(f"Pair index {index} outside [0, {N})")
    s = math.isqrt(4 * n * (n - 1) - 8 * index - 7)
    u = n - 2 - (s - 1) // 2
    v = index + u + 1 - N + (n - u) * (n - u - 1) // 2
    return (u, v)


def falling_factorial(x: int, k: int) -> int:
    """Falling factorial ``(x)_k = x (x-1) ... (x-k+1)``"""
    value = 1
    for i in range(k):
        value *= x - i
    return value


# PURPOSE: map a function over items with an optional worker pool
def parallel_map(func, items, threads: int = 1) -> list:
    """
    Map a function over items preserving the input order

    Uses ``dask.compute`` with the threaded scheduler when ``dask``
    is installed and more than one thread is requested

    Parameters
    ----------
    func: obj
        function to evaluate
    items: iterable
        arguments for each call
    threads: int, default 1
        number of worker threads

    Returns
    -------
    results: list
        results in the order of ``items``
    """
    items = list(items)
    if (threads > 1) and dask_available and (len(items) > 1):
        delayed = dask.delayed(func)
        (results,) = dask.compute(
            [delayed(item) for item in items],
            scheduler="threads",
            num_workers=threads,
        )
        return list(results)
    elif threads > 1:
        logging.debug("dask not available: evaluating serially")
    return [func(item) for item in items]
