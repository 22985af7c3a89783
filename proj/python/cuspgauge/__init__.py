"""Cusp lattice certification, negatively curved fillings, and warped torus metrics."""

from cuspgauge._core import *  # noqa: F401,F403
from cuspgauge._core import __version__  # noqa: F401
