"""Lennard-Jones cell oscillator: action-angle variables, resonances and dynamics."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
