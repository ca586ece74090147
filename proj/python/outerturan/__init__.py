"""Outerplanar Turan numbers of cycles: bounds, constructions, exact search, proof certificates."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
