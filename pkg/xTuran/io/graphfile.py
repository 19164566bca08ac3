#!/usr/bin/env python
"""
graphfile.py
Written by Tyler Sutterley (01/2026)
Reads and writes graphs in the canonical edge-list text format

    # comment lines begin with a hash
    n m
    u v
    ...

with 0 <= u < v < n and edges sorted lexicographically

UPDATE HISTORY:
    Written 01/2026
"""

from __future__ import annotations

import pathlib
import logging
from xTuran.graph import Graph

__all__ = [
    "GraphFileError",
    "read_graph",
    "write_graph",
    "from_file",
    "to_file",
]


class GraphFileError(ValueError):
    """Malformed graph file"""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _integers(text: str, line: int, count: int) -> list:
    fields = text.split()
    if len(fields) != count:
        raise GraphFileError(f"expected {count} integers: '{text}'", line)
    try:
        return [int(f) for f in fields]
    except ValueError as exc:
        raise GraphFileError(f"invalid integer in '{text}'", line) from exc


# PURPOSE: parse the text representation of a graph
def read_graph(text: str) -> Graph:
    """
    Parse a graph from its edge-list text

    Parameters
    ----------
    text: str
        graph file contents

    Returns
    -------
    G: Graph
        parsed graph
    """
    header = None
    edges = []
    seen = set()
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            n, m = _integers(line, number, 2)
            if (n < 1) or (m < 0):
                raise GraphFileError(f"invalid header '{line}'", number)
            header = (n, m)
            continue
        u, v = _integers(line, number, 2)
        n = header[0]
        if not (0 <= u < n) or not (0 <= v < n):
            message = f"vertex index out of range 0..{n - 1}"
            raise GraphFileError(message, number)
        if u == v:
            raise GraphFileError(f"self-loop at vertex {u}", number)
        edge = (min(u, v), max(u, v))
        if edge in seen:
            raise GraphFileError(f"duplicate edge {edge}", number)
        seen.add(edge)
        edges.append(edge)
    if header is None:
        raise GraphFileError("missing header line 'n m'", 1)
    n, m = header
    if len(edges) != m:
        raise GraphFileError(f"header declares {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


# PURPOSE: canonical text representation of a graph
def write_graph(G: Graph, comment: str | None = None) -> str:
    """
    Write a graph as canonical edge-list text

    Parameters
    ----------
    G: Graph
        graph to write
    comment: str or None, default None
        optional comment placed before the header

    Returns
    -------
    text: str
        graph file contents
    """
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{G.n} {G.edge_count}")
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def from_file(filename: str | pathlib.Path) -> Graph:
    """Read a graph file"""
    filename = pathlib.Path(filename).expanduser().absolute()
    logging.info(f"Reading graph from {str(filename)}")
    return read_graph(filename.read_text(encoding="utf-8"))


def to_file(G: Graph, filename: str | pathlib.Path, **kwargs):
    """Write a graph file"""
    filename = pathlib.Path(filename).expanduser().absolute()
    logging.info(f"Writing graph to {str(filename)}")
    filename.write_text(write_graph(G, **kwargs), encoding="utf-8")
