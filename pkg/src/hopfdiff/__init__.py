"""Exact-arithmetic tools for crossed homomorphisms and difference
operators on finite-dimensional and degree-truncated Hopf algebras."""

__version__ = "0.1.0"
