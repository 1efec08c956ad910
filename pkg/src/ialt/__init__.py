"""Interleaved alternant codes: decoding, bounds and simulation."""

__version__ = "0.1.0"
