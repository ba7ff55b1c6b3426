"""Lattices of intermediate structures and their Boolean criteria."""
__version__ = "0.1.0"
