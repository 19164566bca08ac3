#!/usr/bin/env python3
"""
catalog.py
Written by Tyler Sutterley (02/2026)
Load and query the JSON catalog of monotone graph events, event pairs
for correlation checks and verification suites

UPDATE HISTORY:
    Updated 05/2026: read extra catalogs through one entry reader
    Written 02/2026
"""

from __future__ import annotations

import copy
import json
import pathlib
from xTuran.utilities import get_data_path

__all__ = ["load_catalog", "get_event", "get_pair", "suites"]


# PURPOSE: read catalog entries from a JSON file or dictionary
def _entries(source: dict | str | pathlib.Path) -> dict:
    if isinstance(source, dict):
        return dict(source)
    with pathlib.Path(source).open(mode="r", encoding="utf-8") as fid:
        return json.load(fid)


# PURPOSE: load the JSON catalog of events and suites
def load_catalog(extra_catalogs: list = []) -> dict:
    """
    Load the built-in catalog of events, event pairs and suites with
    entries of any additional catalogs replacing entries of the same id

    Parameters
    ----------
    extra_catalogs: list, default []
        JSON file paths or dictionaries of additional entries
    """
    if isinstance(extra_catalogs, (str, pathlib.Path, dict)):
        extra_catalogs = [extra_catalogs]
    entries = _entries(get_data_path(["datasets", "catalog.json"]))
    for source in extra_catalogs:
        entries.update(_entries(source))
    return entries


def _lookup(identifier: str, kind: str, extra_catalogs: list) -> dict:
    entries = load_catalog(extra_catalogs=extra_catalogs)
    known = sorted(k for k, v in entries.items() if v.get("type") == kind)
    if identifier not in known:
        raise ValueError(f"Unknown {kind} {identifier!r}, known: {known}")
    entry = copy.copy(entries[identifier])
    entry["id"] = identifier
    return entry


def get_event(identifier: str, extra_catalogs: list = []) -> dict:
    """
    Catalog entry of a monotone graph event

    Parameters
    ----------
    identifier: str
        event id
    extra_catalogs: list, default []
        additional catalogs to search
    """
    return _lookup(identifier, "event", extra_catalogs)


def get_pair(identifier: str, extra_catalogs: list = []) -> dict:
    """Catalog entry of an event pair with its two event entries"""
    entry = _lookup(identifier, "pair", extra_catalogs)
    entry["f"] = get_event(entry["f"], extra_catalogs=extra_catalogs)
    entry["g"] = get_event(entry["g"], extra_catalogs=extra_catalogs)
    return entry


def suites(extra_catalogs: list = []) -> list:
    """Names of the registered verification suites in catalog order"""
    entries = load_catalog(extra_catalogs=extra_catalogs)
    return [k for k, v in entries.items() if v.get("type") == "suite"]
