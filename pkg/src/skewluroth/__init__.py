"""Exact skew polynomial arithmetic and Lüroth generators for skew fields."""

__version__ = "0.1.0"
