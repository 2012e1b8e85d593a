"""Enumeration and verification of empty lattice 4-simplices by determinant and width."""

__version__ = "0.1.0"
