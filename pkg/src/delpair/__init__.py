"""Exact verification toolkit for deletion-type pairs of Hermitian symmetric spaces."""

__version__ = "0.1.0"
