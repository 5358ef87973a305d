"""Exact PL constructions: four Mobius strips in a cube shell, a polylink of hollow triangles, and rainbow 1-factorizations of Q4."""

__version__ = "0.1.0"
