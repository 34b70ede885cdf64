"""Finite models of the period-index machinery for torsors and Brauer classes."""

__version__ = "0.1.0"
