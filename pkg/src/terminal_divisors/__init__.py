"""Divisors with discrepancy at most 1 over non-Gorenstein terminal
3-fold singularities: enumeration of weighted blowups, exact face
geometry and the genus of the curves that appear."""

__version__ = "0.1.0"
