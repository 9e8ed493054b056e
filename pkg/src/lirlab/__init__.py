"""Locally irregular edge colorings of 2-multigraphs."""

from .mgraph import BLUE, GREEN, RED, YELLOW, EdgeColoring, GraphError, Multigraph, double
from .verify import ConflictReport, verify

__version__ = "0.1.0"

__all__ = [
    "BLUE",
    "GREEN",
    "RED",
    "YELLOW",
    "ConflictReport",
    "EdgeColoring",
    "GraphError",
    "Multigraph",
    "double",
    "verify",
]
