"""Weak Lefschetz Property of monomial complete intersections over F_p."""

__version__ = "0.1.0"
