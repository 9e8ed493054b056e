"""Pertinent edge-decompositions and element colorings.

A pertinent decomposition splits E(G) into paths of length two plus at most one
claw (K13) or claw with two legs subdivided once (K13dd).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from ..mgraph import GraphError, Multigraph, norm
from ..oracle import SearchStats, default_budget

P3, K13, K13DD = "P3", "K13", "K13dd"


class DecompositionError(GraphError):
    pass


@dataclass(frozen=True)
class DecompElement:
    kind: str
    edges: tuple[tuple[int, int], ...]
    central: int
    pendants: tuple[int, ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(x for e in self.edges for x in e)


@dataclass(frozen=True)
class PertinentDecomposition:
    elements: tuple[DecompElement, ...]
    special: int | None
    strongly_pertinent: bool

    def element_of(self) -> dict[tuple[int, int], int]:
        return {e: i for i, el in enumerate(self.elements) for e in el.edges}

    def adjacent(self, i: int, j: int) -> frozenset[int]:
        """Common vertices of elements ``i`` and ``j``."""
        return self.elements[i].vertices & self.elements[j].vertices


def p3(a: int, c: int, b: int) -> DecompElement:
    return DecompElement(P3, (norm(a, c), norm(c, b)), c, (a, b))


def _p3_pairing(n: int, pairs: list[tuple[int, int]]) -> list[DecompElement]:
    """Pair up the edges of a connected even-size graph into paths of length two.

    Vertices are processed deepest-first along a DFS tree; each vertex pairs its
    remaining edges (all but the tree edge to its parent) and uses the parent
    edge only to fix an odd count.
    """
    adj: dict[int, list[int]] = {}
    for u, v in pairs:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for v in adj:
        adj[v].sort()
    root = min(adj)
    parent = {root: None}
    order = []
    stack = [(root, iter(adj[root]))]
    order.append(root)
    while stack:
        x, it = stack[-1]
        for y in it:
            if y not in parent:
                parent[y] = x
                order.append(y)
                stack.append((y, iter(adj[y])))
                break
        else:
            stack.pop()
    used: set[tuple[int, int]] = set()
    out: list[DecompElement] = []
    for x in reversed(order):
        par = parent[x]
        free = [y for y in adj[x] if y != par and norm(x, y) not in used]
        if len(free) % 2:
            if par is None:
                raise DecompositionError("odd number of edges left at the root")
            free.append(par)
        for i in range(0, len(free), 2):
            a, b = free[i], free[i + 1]
            used.add(norm(x, a))
            used.add(norm(x, b))
            out.append(p3(a, x, b))
    if len(used) != len(pairs):
        raise DecompositionError("pairing left edges uncovered")
    return out


def _rest_even(g: Multigraph, removed: set[tuple[int, int]]) -> list[list[tuple[int, int]]] | None:
    rest = [p for p in g.pairs if p not in removed]
    if not rest:
        return []
    h = g.induced_on_pairs(rest)
    comps = []
    for comp in h.components():
        cs = set(comp)
        es = [p for p in rest if p[0] in cs]
        if len(es) % 2:
            return None
        comps.append(es)
    return comps


def _claws(g: Multigraph):
    for h in range(g.n):
        nb = g.neighbors(h)
        if len(nb) < 3:
            continue
        for leaves in combinations(nb, 3):
            yield DecompElement(K13, tuple(norm(h, x) for x in leaves), h, tuple(leaves))


def _subdivided_claws(g: Multigraph):
    for h in range(g.n):
        nb = g.neighbors(h)
        if len(nb) < 3:
            continue
        for leaf, a, c in permutations(nb, 3):
            if a > c:
                continue
            for b in g.neighbors(a):
                if b in (h, leaf, c):
                    continue
                for d in g.neighbors(c):
                    if d in (h, leaf, a, b):
                        continue
                    edges = (norm(h, leaf), norm(h, a), norm(a, b), norm(h, c), norm(c, d))
                    yield DecompElement(K13DD, edges, h, (leaf, b, d))


def pertinent_decomposition(g: Multigraph) -> PertinentDecomposition:
    """Strongly pertinent decomposition of a connected simple graph.

    Even size: paths of length two only. Odd size: the first claw placement
    whose removal leaves even components, else the first subdivided claw; the
    search order certifies that a subdivided claw is used only when no claw
    works.
    """
    if not g.is_simple() or not g.is_connected():
        raise DecompositionError("expected a connected simple graph")
    if g.m % 2 == 0:
        els = _p3_pairing(g.n, list(g.pairs))
        return PertinentDecomposition(tuple(els), None, True)
    for gen in (_claws, _subdivided_claws):
        for sp in gen(g):
            comps = _rest_even(g, set(sp.edges))
            if comps is None:
                continue
            els = [sp]
            for es in comps:
                els.extend(_p3_pairing(g.n, es))
            return PertinentDecomposition(tuple(els), 0, True)
    raise DecompositionError("graph has no pertinent decomposition (it is not colorable)")


def check_decomposition(g: Multigraph, d: PertinentDecomposition) -> None:
    """Raise unless ``d`` partitions E(g) into well-formed elements."""
    seen: list[tuple[int, int]] = []
    specials = 0
    for i, el in enumerate(d.elements):
        seen.extend(el.edges)
        deg: dict[int, int] = {}
        for u, v in el.edges:
            if not g.has_edge(u, v):
                raise DecompositionError(f"element {i} uses a non-edge {u}-{v}")
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        leaves = sorted(x for x, k in deg.items() if k == 1)
        shape = sorted(deg.values())
        expected = {P3: [1, 1, 2], K13: [1, 1, 1, 3], K13DD: [1, 1, 1, 2, 2, 3]}[el.kind]
        if shape != expected or leaves != sorted(el.pendants) or deg[el.central] != max(shape):
            raise DecompositionError(f"element {i} is not a well-formed {el.kind}")
        if el.kind != P3:
            specials += 1
            if d.special != i:
                raise DecompositionError("special element index is wrong")
    if sorted(seen) != sorted(g.pairs):
        raise DecompositionError("elements do not partition the edge set")
    if specials > 1 or (specials == 0 and d.special is not None):
        raise DecompositionError("at most one non-P3 element is allowed")


# element colorings


@dataclass(frozen=True)
class ElementColoring:
    phi: tuple[int, ...]
    color4_edge_count: int
    minimal4: bool
    nodes: int = 0

    def edge_colors(self, d: PertinentDecomposition) -> dict[tuple[int, int], int]:
        return {e: self.phi[i] for i, el in enumerate(d.elements) for e in el.edges}


def _element_order(d: PertinentDecomposition) -> list[int]:
    """Special element first, then BFS over element adjacency."""
    k = len(d.elements)
    at: dict[int, list[int]] = {}
    for i, el in enumerate(d.elements):
        for x in el.vertices:
            at.setdefault(x, []).append(i)
    start = d.special if d.special is not None else 0
    order, seen = [start], {start}
    i = 0
    while i < len(order) or len(order) < k:
        if i == len(order):
            nxt = min(j for j in range(k) if j not in seen)
            order.append(nxt)
            seen.add(nxt)
        x = order[i]
        i += 1
        for v in sorted(d.elements[x].vertices):
            for j in at[v]:
                if j not in seen:
                    seen.add(j)
                    order.append(j)
    return order


def central_condition_ok(d: PertinentDecomposition, i: int, j: int) -> bool:
    """Same-colored adjacent elements may only meet at a central vertex of one of them."""
    a, b = d.elements[i], d.elements[j]
    return all(x == a.central or x == b.central for x in a.vertices & b.vertices)


def find_phi(g: Multigraph, d: PertinentDecomposition, budget_nodes: int | None = None) -> ElementColoring:
    """Element coloring with colors 1..4 minimizing the number of color-4 edges.

    Constraints: the induced edge coloring of ``g`` is locally irregular,
    same-colored adjacent elements meet only at a central vertex of one of them,
    and the special element (if any) gets color 1. Among optimal colorings the
    lexicographically smallest in element order is returned.
    """
    stats = SearchStats(budget=budget_nodes if budget_nodes is not None else default_budget())
    els = d.elements
    k = len(els)
    order = _element_order(d)
    size = [len(el.edges) for el in els]
    # per-vertex count of still-uncolored incident edges, and color degrees
    rem = [g.simple_degree(v) for v in range(g.n)]
    cdeg = [[0] * 5 for _ in range(g.n)]
    phi = [0] * k
    nbr_els: list[list[int]] = [[] for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i != j and els[i].vertices & els[j].vertices:
                nbr_els[i].append(j)
    ok_same = [[central_condition_ok(d, i, j) for j in range(k)] for i in range(k)]
    edges_at: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for i, el in enumerate(els):
        for u, v in el.edges:
            edges_at[u].append((v, i))
            edges_at[v].append((u, i))

    best: list = [None, None]  # cost, phi

    def vertex_ok(x: int) -> bool:
        for y, i in edges_at[x]:
            if rem[y]:
                continue
            col = phi[i]
            if cdeg[x][col] == cdeg[y][col]:
                return False
        return True

    def rec(pos: int, cost: int, maxcol: int) -> None:
        stats.tick("element coloring search")
        if best[0] is not None and cost >= best[0]:
            return
        if pos == k:
            best[0], best[1] = cost, tuple(phi)
            return
        i = order[pos]
        if d.special is not None and i == d.special:
            choices = [1]
        else:
            # colors 1..3 are interchangeable until used (1 is pinned when a special element exists)
            top = min(3, maxcol + 1)
            choices = list(range(1, top + 1)) + [4]
        for col in choices:
            if any(phi[j] == col and not ok_same[i][j] for j in nbr_els[i]):
                continue
            phi[i] = col
            touched = []
            for u, v in els[i].edges:
                for x in (u, v):
                    cdeg[x][col] += 1
                    rem[x] -= 1
                    touched.append(x)
            good = all(rem[x] or vertex_ok(x) for x in set(touched))
            if good:
                rec(pos + 1, cost + (size[i] if col == 4 else 0), max(maxcol, col if col < 4 else maxcol))
            for x in touched:
                cdeg[x][col] -= 1
                rem[x] += 1
            phi[i] = 0

    rec(0, 0, 1 if d.special is not None else 0)
    if best[1] is None:
        raise DecompositionError("no element coloring satisfies the constraints")
    return ElementColoring(best[1], best[0], True, stats.nodes)


def check_phi(g: Multigraph, d: PertinentDecomposition, ec: ElementColoring) -> None:
    """Raise unless ``ec`` meets every element-coloring constraint."""
    phi = ec.phi
    if len(phi) != len(d.elements) or any(c not in (1, 2, 3, 4) for c in phi):
        raise DecompositionError("element coloring is incomplete")
    if d.special is not None and phi[d.special] != 1:
        raise DecompositionError("special element must have color 1")
    for i, j in combinations(range(len(phi)), 2):
        if phi[i] == phi[j] and d.adjacent(i, j) and not central_condition_ok(d, i, j):
            raise DecompositionError(f"elements {i} and {j} violate the central-vertex condition")
    col = ec.edge_colors(d)
    deg = [[0] * 5 for _ in range(g.n)]
    for (u, v), c in col.items():
        deg[u][c] += 1
        deg[v][c] += 1
    for (u, v), c in col.items():
        if deg[u][c] == deg[v][c]:
            raise DecompositionError(f"edge {u}-{v} of color {c} joins equal color degrees")
    if sum(1 for c in col.values() if c == 4) != ec.color4_edge_count:
        raise DecompositionError("color-4 edge count is wrong")
