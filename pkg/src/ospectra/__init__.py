"""Spectral extremal toolkit for outerplanar graphs.

Constructions of the extremal families, exact walk/path counting,
outerplanarity certificates, a self-contained dense eigensolver, the
characteristic walk-count series with certified tails, exhaustive small-order
search, and a reproduction harness (`ospectra verify-paper`).
"""

from ._kernels import backend as kernel_backend
from .graphs import Graph, LargeGraph, graph6_decode, graph6_encode

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "LargeGraph",
    "graph6_decode",
    "graph6_encode",
    "kernel_backend",
    "__version__",
]
