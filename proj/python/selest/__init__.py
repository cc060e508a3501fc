"""Selectivity estimation for inequality restrictions and joins from equi-depth histograms."""

from ._selest import *  # noqa: F401,F403
from ._selest import __doc__  # noqa: F401

__version__ = "0.1.0"
