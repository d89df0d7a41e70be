"""Generalized Catalan numbers, their Laplace transforms, Eynard-Orantin forms and the quantum curve x = z + 1/z, in exact arithmetic."""

__version__ = "0.1.0"
