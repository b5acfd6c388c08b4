"""Exact computational algebra for icosahedral quartic double solids."""

__version__ = "0.1.0"
