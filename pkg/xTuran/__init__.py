#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
xTuran
======

Python tools for comparing the largest K_r-free and (r-1)-partite
subgraphs of random graphs with exact solvers, subgraph counts,
lower tail bounds and seeded experiments

Documentation is available at https://xTuran.readthedocs.io
"""

# base modules
import xTuran.bounds
import xTuran.coloring
import xTuran.constants
import xTuran.counts
import xTuran.cuts
import xTuran.experiments
import xTuran.generators
import xTuran.regularity
import xTuran.rooted
import xTuran.simulate
import xTuran.solvers
import xTuran.utilities
import xTuran.verify
from xTuran.graph import Graph, Cut, turan_graph, turan_number
from xTuran.solvers import turan_gap
from xTuran import io, datasets

import xTuran.version

# get version number
__version__ = xTuran.version.version
