"""Exact symbolic engine for the twisted sigma-model on the quantum projective line."""

__version__ = "0.1.0"
