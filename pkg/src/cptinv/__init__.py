"""Finite inverse monoids, compact inverse categories and their
decompositions into semilattice-indexed diagrams."""

__version__ = "0.1.0"
