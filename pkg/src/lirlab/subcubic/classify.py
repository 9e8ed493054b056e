"""Shapes of monochromatic components under an element coloring."""

from __future__ import annotations

from functools import lru_cache

import networkx as nx

from ..mgraph import GraphError

# a: P3; b: spider with legs 1,1,2; c: two claws joined through a middle vertex;
# d: K13; e: K13 with two legs subdivided; f: (e) plus a P3 at a subdivided leg end;
# g: (f) plus two more edges at the other subdivided leg end
SHAPE_EDGES = {
    "a": [(0, 1), (1, 2)],
    "b": [(0, 1), (1, 2), (1, 3), (3, 4)],
    "c": [(0, 1), (1, 2), (1, 3), (3, 4), (5, 4), (4, 6)],
    "d": [(1, 0), (0, 2), (0, 3)],
    "e": [(1, 0), (0, 2), (0, 3), (4, 2), (3, 5)],
    "f": [(0, 2), (4, 2), (3, 5), (6, 5), (5, 7), (1, 0), (0, 3)],
    "g": [(0, 2), (4, 2), (3, 5), (6, 5), (5, 7), (1, 0), (0, 3), (4, 8), (4, 9)],
}


class ShapeError(GraphError):
    pass


@lru_cache(maxsize=None)
def _shape_graphs() -> dict[str, nx.Graph]:
    return {k: nx.Graph(v) for k, v in SHAPE_EDGES.items()}


def shape_of(edges) -> str:
    h = nx.Graph(list(edges))
    for name, ref in _shape_graphs().items():
        if h.number_of_edges() == ref.number_of_edges() and nx.is_isomorphic(h, ref):
            return name
    raise ShapeError(f"component with edges {sorted(h.edges())} matches no known shape")


def mono_components(edge_colors: dict[tuple[int, int], int]) -> list[tuple[int, list[tuple[int, int]]]]:
    """``(color, edges)`` for every connected component of every color class."""
    out = []
    for col in sorted(set(edge_colors.values())):
        h = nx.Graph([e for e, c in edge_colors.items() if c == col])
        for comp in sorted(nx.connected_components(h), key=min):
            out.append((col, sorted(tuple(sorted(e)) for e in h.subgraph(comp).edges())))
    return out


def classify_mono_components(edge_colors: dict[tuple[int, int], int]) -> list[tuple[int, str, list[tuple[int, int]]]]:
    """``(color, shape, edges)`` per monochromatic component; raises on unknown shapes."""
    return [(col, shape_of(es), es) for col, es in mono_components(edge_colors)]
