"""Exact computations for anti-Ramsey problems on complete graphs."""
from .colorings import ColoringOfKn, find_rainbow_copy, has_rainbow_copy, is_family_free, num_colors
from .families import GraphFamily, decomposition_family, decomposition_remainder, decomposition_sequence
from .graph import Graph
from .oracle import ArResult, ar_exact

__version__ = "0.1.0"
