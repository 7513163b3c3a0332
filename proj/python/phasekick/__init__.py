"""Exact state-vector simulation and verification of f-conditioned phase
transforms with uninitialized ancilla registers."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
