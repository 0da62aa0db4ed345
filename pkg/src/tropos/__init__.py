"""Tropos - exact tropical total positivity toolkit."""

__version__ = "0.1.0"
