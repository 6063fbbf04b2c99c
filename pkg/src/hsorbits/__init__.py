"""Combinatorics of B-orbits in abelian nilradicals and Hermitian symmetric spaces."""

__version__ = "0.1.0"
