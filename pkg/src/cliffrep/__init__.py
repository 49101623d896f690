"""Representations of generalized Clifford algebras, with the cubic-surface lattice and a numeric solver."""

__version__ = "0.1.0"
