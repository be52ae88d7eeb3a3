"""Quantum discord, entropic uncertainty bounds and shareability checks."""

from ._qdiscord import *  # noqa: F401,F403

__version__ = "0.1.0"
