"""Combinatorics of matroid Chow rings, Stembridge codes and Eulerian symmetric functions."""

__version__ = "0.1.0"
