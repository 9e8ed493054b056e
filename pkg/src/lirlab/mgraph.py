"""Multigraphs with edge multiplicity 1 or 2, edge colorings and color degrees.

Vertices are dense integers ``0..n-1``. An edge is an unordered pair stored as
``(u, v)`` with ``u < v``; a 2-multigraph keeps one entry per pair with
multiplicity 2. Individual parallel copies are addressed as ``(u, v, copy)``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

RED = 1
BLUE = 2
GREEN = 3
YELLOW = 4

COLOR_NAMES = {RED: "red", BLUE: "blue", GREEN: "green", YELLOW: "yellow"}

Pair = tuple[int, int]
CopyRef = tuple[int, int, int]


class GraphError(ValueError):
    """Raised on malformed graphs or operations that violate preconditions."""


class PartialColoringError(GraphError):
    pass


def norm(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[Pair, int], ...]
    labels: tuple[str, ...] | None = None
    _adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _mu: Mapping[Pair, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        mu: dict[Pair, int] = {}
        for (u, v), m in self.edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {(u, v)} out of range for n={self.n}")
            if u > v:
                raise GraphError(f"edge {(u, v)} not normalized")
            if m not in (1, 2):
                raise GraphError(f"multiplicity {m} of {(u, v)} not in {{1, 2}}")
            if (u, v) in mu:
                raise GraphError(f"duplicate pair {(u, v)}")
            mu[(u, v)] = m
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("labels length differs from n")
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in mu:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "_mu", MappingProxyType(mu))

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[Sequence[int]], multiplicity: int = 1, labels=None
    ) -> Multigraph:
        """Build a graph from ``(u, v)`` or ``(u, v, mu)`` tuples."""
        acc: dict[Pair, int] = {}
        for e in edges:
            u, v = e[0], e[1]
            m = e[2] if len(e) > 2 else multiplicity
            p = norm(u, v)
            if p in acc:
                raise GraphError(f"duplicate pair {p}")
            acc[p] = m
        return cls(n, tuple(sorted(acc.items())), None if labels is None else tuple(labels))

    # basic queries

    @property
    def pairs(self) -> list[Pair]:
        return [p for p, _ in self.edges]

    def mu(self, u: int, v: int) -> int:
        return self._mu.get(norm(u, v), 0)

    def has_edge(self, u: int, v: int) -> bool:
        return norm(u, v) in self._mu

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        """Multiplicity-weighted degree."""
        return sum(self._mu[norm(v, w)] for w in self._adj[v])

    def simple_degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    @property
    def m(self) -> int:
        """Number of distinct pairs."""
        return len(self.edges)

    def copies(self) -> Iterator[CopyRef]:
        for (u, v), m in self.edges:
            for c in range(m):
                yield (u, v, c)

    def num_copies(self) -> int:
        return sum(m for _, m in self.edges)

    def is_simple(self) -> bool:
        return all(m == 1 for _, m in self.edges)

    def is_double(self) -> bool:
        return all(m == 2 for _, m in self.edges)

    def components(self) -> list[list[int]]:
        """Connected components that contain at least one edge."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s] or not self._adj[s]:
                continue
            comp, stack = [], [s]
            seen[s] = True
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self._adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        comps = self.components()
        return len(comps) == 1 and len(comps[0]) == self.n

    def simple(self) -> Multigraph:
        """Underlying simple graph."""
        return Multigraph(self.n, tuple((p, 1) for p, _ in self.edges), self.labels)

    def induced_on_pairs(self, pairs: Iterable[Pair], relabel: bool = False):
        """Subgraph on the given pairs (same multiplicities).

        With ``relabel`` the non-isolated vertices are renumbered densely and the
        old-to-new map is returned alongside the graph.
        """
        keep = sorted({norm(*p) for p in pairs})
        for p in keep:
            if p not in self._mu:
                raise GraphError(f"pair {p} not in graph")
        if not relabel:
            return Multigraph(self.n, tuple((p, self._mu[p]) for p in keep))
        verts = sorted({x for p in keep for x in p})
        idx = {v: i for i, v in enumerate(verts)}
        g = Multigraph.from_edges(len(verts), [(idx[u], idx[v], self._mu[(u, v)]) for u, v in keep])
        return g, idx

    def delete_vertices(self, dead: Iterable[int]) -> tuple[Multigraph, dict[int, int]]:
        """Remove vertices, renumber the rest densely; returns graph and old-to-new map."""
        dead = set(dead)
        alive = [v for v in range(self.n) if v not in dead]
        idx = {v: i for i, v in enumerate(alive)}
        es = [(idx[u], idx[v], m) for (u, v), m in self.edges if u in idx and v in idx]
        return Multigraph.from_edges(len(alive), es), idx

    def __str__(self) -> str:
        body = ", ".join(f"{u}-{v}" + ("" if m == 1 else f"x{m}") for (u, v), m in self.edges)
        return f"Multigraph(n={self.n}: {body})"


def double(g: Multigraph) -> Multigraph:
    """The 2-multigraph obtained by replacing every edge with two parallel edges."""
    if not g.is_simple():
        raise GraphError("double() expects a simple graph")
    return Multigraph(g.n, tuple((p, 2) for p, _ in g.edges), g.labels)


class EdgeColoring(Mapping[CopyRef, int]):
    """Read-only map from edge copies ``(u, v, copy)`` to positive colors.

    May be partial; use :meth:`is_total` to check against a graph.
    """

    __slots__ = ("_a",)

    def __init__(self, assignment: Mapping[CopyRef, int] | Iterable[tuple[CopyRef, int]] = ()):
        a = {}
        items = assignment.items() if isinstance(assignment, Mapping) else assignment
        for (u, v, c), col in items:
            if u > v:
                u, v = v, u
            if col < 1:
                raise GraphError(f"color {col} < 1 on {(u, v, c)}")
            a[(u, v, c)] = col
        self._a = a

    def __getitem__(self, key: CopyRef) -> int:
        return self._a[key]

    def __iter__(self):
        return iter(self._a)

    def __len__(self) -> int:
        return len(self._a)

    def __repr__(self) -> str:
        return f"EdgeColoring({dict(sorted(self._a.items()))})"

    def __eq__(self, other) -> bool:
        if isinstance(other, EdgeColoring):
            return self._a == other._a
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._a.items()))

    @property
    def palette(self) -> set[int]:
        return set(self._a.values())

    @property
    def palette_size(self) -> int:
        return max(self._a.values(), default=0)

    def is_total(self, g: Multigraph) -> bool:
        return all(ref in self._a for ref in g.copies()) and len(self._a) == g.num_copies()

    def check_fits(self, g: Multigraph) -> None:
        for u, v, c in self._a:
            if c >= g.mu(u, v):
                raise GraphError(f"copy {(u, v, c)} does not exist in graph")

    def multiedge(self, u: int, v: int) -> tuple[int, ...]:
        """Sorted colors on the copies of pair ``uv`` that are assigned."""
        u, v = norm(u, v)
        return tuple(sorted(self._a[(u, v, c)] for c in range(2) if (u, v, c) in self._a))

    def merged(self, other: Mapping[CopyRef, int]) -> EdgeColoring:
        out = dict(self._a)
        for k, col in other.items():
            if k in out and out[k] != col:
                raise GraphError(f"conflicting assignment for {k}")
            out[k] = col
        return EdgeColoring(out)

    def relabeled(self, mapping: Mapping[int, int]) -> EdgeColoring:
        """Apply a color permutation/renaming."""
        return EdgeColoring({k: mapping.get(c, c) for k, c in self._a.items()})


def color_degrees(g: Multigraph, c: Mapping[CopyRef, int]) -> list[dict[int, int]]:
    """Per-vertex ``color -> count`` over assigned copies."""
    prof: list[dict[int, int]] = [defaultdict(int) for _ in range(g.n)]
    for (u, v, _), col in c.items():
        prof[u][col] += 1
        prof[v][col] += 1
    return [dict(p) for p in prof]


def color_degree(g: Multigraph, c: Mapping[CopyRef, int], v: int, color: int) -> int:
    total = 0
    for w in g.neighbors(v):
        a, b = norm(v, w)
        for k in range(g.mu(a, b)):
            col = c.get((a, b, k))
            if col is None:
                raise PartialColoringError(f"copy {(a, b, k)} at vertex {v} is uncolored")
            total += col == color
    return total


def monochromatic_subgraph(g: Multigraph, c: Mapping[CopyRef, int], color: int) -> Multigraph:
    """Subgraph formed by the copies of one color, on the same vertex set.

    Vertices without such copies stay in the index range but carry no edges.
    """
    mult: dict[Pair, int] = defaultdict(int)
    for (u, v, _), col in c.items():
        if col == color:
            mult[(u, v)] += 1
    return Multigraph(g.n, tuple(sorted(mult.items())))


def multiedge_coloring(pairs_colors: Iterable[tuple[Pair, tuple[int, int]]]) -> dict[CopyRef, int]:
    """Expand ``((u, v), (c0, c1))`` items into copy assignments for a 2-multigraph.

    Copy 0 always gets the smaller color so equal colorings compare equal.
    """
    out = {}
    for (u, v), cols in pairs_colors:
        u, v = norm(u, v)
        c0, c1 = sorted(cols)
        out[(u, v, 0)] = c0
        out[(u, v, 1)] = c1
    return out


def double_coloring(g: Multigraph, c: Mapping[CopyRef, int]) -> EdgeColoring:
    """Lift a coloring of simple ``g`` to ``double(g)`` by coloring both copies alike."""
    out = {}
    for (u, v, k), col in c.items():
        if k != 0:
            raise GraphError("expected a coloring of a simple graph")
        out[(u, v, 0)] = col
        out[(u, v, 1)] = col
    return EdgeColoring(out)
