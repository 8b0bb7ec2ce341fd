"""Stabilizing consensus over time-varying digraphs.

Thin wrapper around the compiled _core module; everything public lives there.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__version__ = "0.1.0"
