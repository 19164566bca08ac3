#!/usr/bin/env python
"""
version.py (02/2026)
Version of the installed xTuran package, recorded in sweep results
and printed by ``xturan --version``

UPDATE HISTORY:
    Updated 04/2026: fall back to a development version for source trees
    Written 02/2026
"""

import importlib.metadata

__all__ = ["project_name", "version", "full_version"]

# get project name
project_name = "xTuran"
# package metadata of installed distributions
try:
    version = importlib.metadata.version(project_name)
except importlib.metadata.PackageNotFoundError:
    version = "0.0.0.dev0"
# append "v" before the version
full_version = f"v{version}"
