"""Exact computations with hyperbolic lattices, reflection chambers, cones of
lattice vectors, Galois orbits of roots and first group cohomology."""

__version__ = "0.1.0"
