"""Exact verification toolkit: free-group automorphism generating sets,
simplicial nerve homology, and rational convex intersection patterns."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
