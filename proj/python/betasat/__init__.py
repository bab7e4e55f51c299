"""Davis-Putnam elimination for beta-acyclic CNF formulas.

Variables are 1-based DIMACS ids throughout.
"""

from ._core import *  # noqa: F401,F403
from ._core import BetasatError, Formula

__all__ = [name for name in dir() if not name.startswith("_")]
