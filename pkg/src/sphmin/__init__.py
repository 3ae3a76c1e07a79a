"""Exact verification of exchange relations between generalised spherical minors.

Modules:

* :mod:`sphmin.weyl`: root systems, Weyl group elements and twisted lengths.
* :mod:`sphmin.pair`: the catalog of spherical pairs and their exchange data.
* :mod:`sphmin.claims`: combinatorial checks (action tables, weight identities).
* :mod:`sphmin.minors`: matrix realizations and exact numeric identity checks.
* :mod:`sphmin.cli`: the ``sphmin`` command.
"""
from __future__ import annotations

from .pair import PairError, SphericalPair, Unsupported, catalog, parse_pair
from .report import VerificationReport
from .weyl import RootSystem, WeylElem, WeylError

__version__ = "0.1.0"

__all__ = [
    "PairError", "RootSystem", "SphericalPair", "Unsupported", "VerificationReport",
    "WeylElem", "WeylError", "catalog", "parse_pair", "__version__",
]
