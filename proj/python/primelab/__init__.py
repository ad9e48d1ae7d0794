"""Desk-scale laboratory for packing machines, prime witnesses and zeta numerics."""

from ._primelab import *  # noqa: F401,F403
from ._primelab import __doc__  # noqa: F401

__version__ = "0.1.0"
