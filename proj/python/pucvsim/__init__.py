"""Geometry and intensity of parametric up/down conversion of the vacuum
in a pumped uniaxial crystal (Python bindings over the C++ core)."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__version__ = "0.1.0"
