"""Inclusion calculus of Carleson sets and Carleson windows in the unit disk."""

__version__ = '1.0.0'
