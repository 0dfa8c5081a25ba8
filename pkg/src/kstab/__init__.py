"""Exact-arithmetic chamber decompositions and K-stability invariant integrals."""

__version__ = "0.1.0"
