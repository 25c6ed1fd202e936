"""Exact combinatorics of the periodic XX chain: walkers, Schur functions, plane partitions."""
from .exact import GuardError

__version__ = "0.1.0"
__all__ = ["GuardError"]
