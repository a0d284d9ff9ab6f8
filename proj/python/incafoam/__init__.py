"""Gauss-diagram calculus for Inca foams: moves, canonical forms, bounded
equivalence search, coloring/linking invariants, Shannon capacity, and prime
factorization, backed by the C++ core."""

from incafoam._core import *  # noqa: F401,F403
from incafoam._core import __doc__  # noqa: F401

__version__ = "0.1.0"
