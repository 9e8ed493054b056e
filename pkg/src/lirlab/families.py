"""Test-family generators: paths, cycles, cliques, random regular graphs, split
graphs and exhaustive isomorphism-free enumeration of small connected graphs."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator, Sequence

import pynauty

from .mgraph import GraphError, Multigraph

MAX_ENUM_N = 11


def path(length: int) -> Multigraph:
    """Path with ``length`` edges."""
    if length < 1:
        raise GraphError("path length must be positive")
    return Multigraph.from_edges(length + 1, [(i, i + 1) for i in range(length)])


def cycle(n: int) -> Multigraph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Multigraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Multigraph:
    if n < 1:
        raise GraphError("n must be positive")
    return Multigraph.from_edges(n, combinations(range(n), 2))


def star(k: int) -> Multigraph:
    return Multigraph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def wheel(rim: int) -> Multigraph:
    """Hub 0 joined to a cycle on ``rim`` vertices."""
    es = [(0, i) for i in range(1, rim + 1)] + [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Multigraph.from_edges(rim + 1, es)


def butterfly() -> Multigraph:
    """Two triangles sharing vertex 0."""
    return Multigraph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def bow_tie() -> Multigraph:
    """Two butterflies whose centres 0 and 1 are joined by an edge (10 vertices, 13 edges).

    The only known colorable simple graph that needs four colors.
    """
    return Multigraph.from_edges(
        10,
        [(0, 1), (0, 2), (0, 3), (2, 3), (0, 4), (0, 5), (4, 5),
         (1, 6), (1, 9), (6, 9), (1, 7), (1, 8), (7, 8)],
    )


def petersen() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph.from_edges(10, outer + spokes + inner)


def random_regular(n: int, d: int, seed: int | None = None, max_tries: int = 10_000) -> Multigraph:
    """Connected simple ``d``-regular graph from the pairing model with rejection."""
    if d < 1 or n <= d or (n * d) % 2:
        raise GraphError(f"no simple {d}-regular graph on {n} vertices")
    rng = random.Random(seed)
    points = [v for v in range(n) for _ in range(d)]
    for _ in range(max_tries):
        rng.shuffle(points)
        es = set()
        ok = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            if u == v or (min(u, v), max(u, v)) in es:
                ok = False
                break
            es.add((min(u, v), max(u, v)))
        if not ok:
            continue
        g = Multigraph.from_edges(n, es)
        if g.is_connected():
            return g
    raise GraphError(f"pairing model failed {max_tries} times for n={n}, d={d}")


def split_graph(n: int, d: Sequence[int]) -> Multigraph:
    """Clique on ``n`` vertices where clique vertex ``i`` gets ``d[i]`` private pendant vertices."""
    if len(d) != n or any(x < 0 for x in d):
        raise GraphError("d-sequence must have one non-negative entry per clique vertex")
    es = list(combinations(range(n), 2))
    nxt = n
    for i, k in enumerate(d):
        for _ in range(k):
            es.append((i, nxt))
            nxt += 1
    return Multigraph.from_edges(nxt, es)


def subdivide(g: Multigraph, times: int = 1) -> Multigraph:
    """Replace each edge by a path with ``times + 1`` edges."""
    es = []
    nxt = g.n
    for u, v in g.pairs:
        prev = u
        for _ in range(times):
            es.append((prev, nxt))
            prev = nxt
            nxt += 1
        es.append((prev, v))
    return Multigraph.from_edges(nxt, es)


# exhaustive enumeration


def certificate(g: Multigraph) -> tuple[int, bytes]:
    adj = {v: list(g.neighbors(v)) for v in range(g.n)}
    return g.n, pynauty.certificate(pynauty.Graph(g.n, adjacency_dict=adj))


def _max_deg(limit: int | None) -> Callable[[Multigraph], bool]:
    return lambda g: limit is None or all(g.simple_degree(v) <= limit for v in range(g.n))


def deg3_independent(g: Multigraph) -> bool:
    return all(not (g.simple_degree(u) == 3 and g.simple_degree(v) == 3) for u, v in g.pairs)


@lru_cache(maxsize=None)
def _level(n: int, max_degree: int | None, independent3: bool) -> tuple[Multigraph, ...]:
    """All connected graphs on ``n`` vertices in a vertex-deletion-closed class.

    Every connected graph has a vertex whose removal keeps it connected, so each
    member arises from a member on ``n - 1`` vertices by adding one vertex.
    """
    if n == 1:
        return (Multigraph(1, ()),)
    ok_deg = _max_deg(max_degree)
    seen: dict[tuple[int, bytes], Multigraph] = {}
    for h in _level(n - 1, max_degree, independent3):
        free = [v for v in range(h.n) if max_degree is None or h.simple_degree(v) < max_degree]
        top = len(free) if max_degree is None else min(max_degree, len(free))
        for k in range(1, top + 1):
            for nb in combinations(free, k):
                g = Multigraph.from_edges(n, list(h.pairs) + [(v, n - 1) for v in nb])
                if not ok_deg(g):
                    continue
                if independent3 and not deg3_independent(g):
                    continue
                key = certificate(g)
                if key not in seen:
                    seen[key] = g
    return tuple(seen[k] for k in sorted(seen))


def enumerate_connected(n: int, max_degree: int | None = None, deg3_independent_only: bool = False) -> Iterator[Multigraph]:
    """Connected graphs on exactly ``n`` vertices, one per isomorphism class."""
    if not 1 <= n <= MAX_ENUM_N:
        raise GraphError(f"enumeration is offered for 1 <= n <= {MAX_ENUM_N}")
    if max_degree is None and n > 9:
        raise GraphError("unrestricted enumeration is offered for n <= 9 only")
    if deg3_independent_only and max_degree != 3:
        raise GraphError("degree-3 independence applies to subcubic enumeration")
    yield from _level(n, max_degree, deg3_independent_only)


def enumerate_connected_subcubic(n: int) -> Iterator[Multigraph]:
    return enumerate_connected(n, max_degree=3)


def cubic_graphs(n: int) -> Iterator[Multigraph]:
    for g in enumerate_connected(n, max_degree=3):
        if all(g.simple_degree(v) == 3 for v in range(g.n)):
            yield g


def cubic_subdivided(n: int) -> Iterator[Multigraph]:
    """Cubic graphs on ``n`` vertices with every edge subdivided once."""
    for g in cubic_graphs(n):
        yield subdivide(g)


def gen_family(kind: str, *args, seed: int | None = None) -> Iterator[Multigraph]:
    """Dispatch by family name; yields graphs."""
    if kind == "path":
        yield path(*args)
    elif kind == "cycle":
        yield cycle(*args)
    elif kind == "complete":
        yield complete(*args)
    elif kind == "random_regular":
        n, d = args[:2]
        count = args[2] if len(args) > 2 else 1
        rng = random.Random(seed)
        for _ in range(count):
            yield random_regular(n, d, seed=rng.randrange(2**31))
    elif kind == "enumerate_connected_subcubic":
        yield from enumerate_connected_subcubic(*args)
    elif kind == "enumerate_connected":
        yield from enumerate_connected(*args)
    elif kind == "split":
        n, d = args
        yield split_graph(n, d)
    elif kind == "cubic_subdivided":
        yield from cubic_subdivided(*args)
    else:
        raise GraphError(f"unknown family {kind!r}")
