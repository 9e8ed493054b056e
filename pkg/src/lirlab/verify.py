"""Local irregularity checks for colored multigraphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .mgraph import CopyRef, GraphError, Multigraph, PartialColoringError, color_degrees, norm


@dataclass(frozen=True)
class ConflictReport:
    conflicts: tuple[tuple[int, int, int], ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.conflicts

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(f"{u}-{v} color {c}" for u, v, c in self.conflicts)


def verify(g: Multigraph, c: Mapping[CopyRef, int]) -> ConflictReport:
    """Report every pair joined by color ``k`` whose endpoints share their ``k``-degree."""
    for ref in g.copies():
        if ref not in c:
            raise PartialColoringError(f"copy {ref} is uncolored")
    if len(c) != g.num_copies():
        raise GraphError("coloring refers to copies outside the graph")
    return _conflicts(g, c)


def verify_partial(g: Multigraph, c: Mapping[CopyRef, int]) -> ConflictReport:
    """Same check restricted to the colored copies; uncolored copies are ignored."""
    return _conflicts(g, c)


def _conflicts(g: Multigraph, c: Mapping[CopyRef, int]) -> ConflictReport:
    deg = color_degrees(g, c)
    seen = set()
    out = []
    for (u, v, _), col in sorted(c.items()):
        if (u, v, col) in seen:
            continue
        seen.add((u, v, col))
        if deg[u].get(col, 0) == deg[v].get(col, 0):
            out.append((u, v, col))
    return ConflictReport(tuple(out))


def is_locally_irregular(g: Multigraph) -> bool:
    return all(g.degree(u) != g.degree(v) for u, v in g.pairs)


def pendant_pairs(g: Multigraph) -> list[tuple[int, int]]:
    """Pairs ``(leaf, other)`` for multiedges whose ``leaf`` has no other neighbor."""
    out = []
    for u, v in g.pairs:
        if g.simple_degree(u) == 1:
            out.append((u, v))
        if g.simple_degree(v) == 1:
            out.append((v, u))
    return out


def verify_pendant_invariant(g: Multigraph, c: Mapping[CopyRef, int], red: int = 1, blue: int = 2) -> bool:
    """No pendant red-blue multiedge may end in a vertex of red and blue degree three."""
    if not set(c.values()) <= {red, blue}:
        raise GraphError("pendant invariant is defined for two-color palettes only")
    deg = color_degrees(g, c)
    for leaf, other in pendant_pairs(g):
        a, b = norm(leaf, other)
        cols = sorted(c[(a, b, k)] for k in range(g.mu(a, b)))
        if cols == sorted([red, blue]):
            if deg[other].get(red, 0) == 3 and deg[other].get(blue, 0) == 3:
                return False
    return True


def verify_property_P(g: Multigraph, c: Mapping[CopyRef, int], decomposition, phi) -> bool:
    """Pendant vertices of elements with element-color 1..3 avoid color degree five.

    ``decomposition`` is a :class:`~lirlab.subcubic.decomposition.PertinentDecomposition`
    and ``phi`` a sequence of element colors aligned with its elements.
    """
    elements = decomposition.elements
    if phi is None or len(phi) != len(elements) or any(p is None for p in phi):
        raise GraphError("element coloring is missing entries")
    deg = color_degrees(g, c)
    for el, col in zip(elements, phi):
        if col not in (1, 2, 3):
            continue
        for v in el.pendants:
            if any(d == 5 for d in deg[v].values()):
                return False
    return True


def naive_verify(g: Multigraph, c: Mapping[CopyRef, int]) -> bool:
    """Independent check: build each color's subgraph and test it for local irregularity."""
    from .mgraph import monochromatic_subgraph

    for col in set(c.values()):
        sub = monochromatic_subgraph(g, c, col)
        if not is_locally_irregular(sub):
            return False
    return True
