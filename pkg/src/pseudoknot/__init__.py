"""Exact enumeration of k-noncrossing RNA structures.

Counts are computed from lattice walks in a Weyl chamber (three independent
routes), turned into structure counts by inclusion-exclusion, and checked
against closed forms and a brute-force oracle.
"""
from .core import Diagram, Series, SignedPermutation, Walk, binomial, catalan
from .transforms import (
    S,
    S_circular,
    S_circular_total,
    S_restricted,
    S_restricted_total,
    S_total,
    f,
    f_total,
)

__all__ = [
    "Diagram", "Series", "SignedPermutation", "Walk", "binomial", "catalan",
    "S", "S_total", "S_circular", "S_circular_total", "S_restricted",
    "S_restricted_total", "f", "f_total",
]
__version__ = "0.1.0"
