"""Exact computations around minimal triangulations of projective planes over
the Hurwitz algebras and the matching Kostant decompositions."""

__version__ = "0.1.0"
