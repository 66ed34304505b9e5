"""Exact invariants of graded tilting data for GLSMs over Grassmannians."""

__version__ = "0.1.0"
