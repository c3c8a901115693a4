"""Oriented Riordan graphs over Z_p: construction, structure and brute-force checks."""
__version__ = "0.1.0"
