"""Exact computations in degenerate affine Schur algebras and their Yangian images."""

__version__ = "0.1.0"
