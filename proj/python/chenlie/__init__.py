"""Exact computations in free Lie algebras, shuffle algebras, Chen iterated
integrals and Melnikov functions.

Square brackets are Lie brackets ("[x,[x,y]]"); parentheses with a comma are
group commutators ("(x,y)" = x y x^-1 y^-1).
"""

from ._core import *  # noqa: F401,F403
from ._core import Error, DomainError, AlphabetMismatch, ParseError  # noqa: F401

__version__ = "0.1.0"
