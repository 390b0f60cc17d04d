"""Exact series engine for sigma-function addition formulae on the general cubic curve."""

__version__ = "0.1.0"
