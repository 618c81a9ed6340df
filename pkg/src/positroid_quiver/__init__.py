"""Combinatorics, moment graphs and finite-field checks for the quiver Grassmannians X(k, n)."""
from .affperm import BoundedAffinePermutation, from_necklace, length, to_necklace
from .momentgraph import MomentGraph, build, cell_dim, poincare, tnn_poincare
from .necklace import Necklace, enumerate_necklaces, necklace_leq, parse_necklace

__all__ = [
    "BoundedAffinePermutation",
    "MomentGraph",
    "Necklace",
    "build",
    "cell_dim",
    "enumerate_necklaces",
    "from_necklace",
    "length",
    "necklace_leq",
    "parse_necklace",
    "poincare",
    "tnn_poincare",
    "to_necklace",
]
