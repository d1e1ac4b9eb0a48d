"""Exact cluster mutation, exchange graphs, analytics, and learning tools."""

__version__ = "0.1.0"
