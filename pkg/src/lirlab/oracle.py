"""Exhaustive backtracking searches used as ground truth on small graphs.

Every search counts visited nodes and raises :class:`BudgetExceeded` instead of
guessing when the node budget runs out. A ``None`` result therefore always
means the search space was exhausted.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field
from typing import Callable, Mapping

from .mgraph import CopyRef, EdgeColoring, GraphError, Multigraph, norm

DEFAULT_BUDGET = 20_000_000


class BudgetExceeded(RuntimeError):
    def __init__(self, nodes: int, what: str = "search"):
        super().__init__(f"{what} exceeded its budget of {nodes} nodes")
        self.nodes = nodes


class LirUnknown(RuntimeError):
    """No coloring with at most ``k_max`` colors exists, but ``k_max`` is too small to
    conclude that the graph is uncolorable."""


def default_budget() -> int:
    env = os.environ.get("LIRLAB_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


# running total of search nodes across every search in the current context
_meter: ContextVar[list[int] | None] = ContextVar("lirlab_node_meter", default=None)


@contextmanager
def node_meter():
    """Yield a one-element list holding the number of search nodes visited so far."""
    cell = [0]
    token = _meter.set(cell)
    try:
        yield cell
    finally:
        _meter.reset(token)


@dataclass
class SearchStats:
    nodes: int = 0
    exhausted: bool = False
    budget: int = field(default_factory=default_budget)

    def tick(self, what: str) -> None:
        self.nodes += 1
        cell = _meter.get()
        if cell is not None:
            cell[0] += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.budget, what)


UNCOLORABLE = "uncolorable"


@dataclass(frozen=True)
class LirResult:
    value: int | str
    witness: EdgeColoring | None
    nodes: int = 0

    @property
    def colorable(self) -> bool:
        return self.value != UNCOLORABLE


@dataclass(frozen=True)
class NsdColoring:
    weights: Mapping[tuple[int, int], int]
    sums: tuple[int, ...]


@dataclass(frozen=True)
class VertexColoring:
    classes: tuple[int, ...]  # class index 1..k per vertex

    @property
    def k(self) -> int:
        return max(self.classes, default=0)

    def members(self, i: int) -> list[int]:
        return [v for v, c in enumerate(self.classes) if c == i]


def _search_order(g: Multigraph, verts: list[int]) -> list[int]:
    """BFS order from a maximum-degree vertex, neighbors visited high degree first."""
    start = max(verts, key=lambda v: (g.degree(v), -v))
    order, seen = [start], {start}
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for y in sorted(g.neighbors(x), key=lambda w: (-g.degree(w), w)):
            if y not in seen:
                seen.add(y)
                order.append(y)
    return order


def _pair_order(g: Multigraph, verts: list[int]) -> list[tuple[int, int]]:
    pos = {v: i for i, v in enumerate(_search_order(g, verts))}
    pairs = [p for p in g.pairs if p[0] in pos]
    return sorted(pairs, key=lambda p: (max(pos[p[0]], pos[p[1]]), min(pos[p[0]], pos[p[1]])))


def _color_component(
    g: Multigraph,
    verts: list[int],
    k: int,
    stats: SearchStats,
    accept: Callable[[Mapping[CopyRef, int]], bool] | None,
) -> dict[CopyRef, int] | None:
    pairs = _pair_order(g, verts)
    copies = [(u, v, c) for u, v in pairs for c in range(g.mu(u, v))]
    ncopy = len(copies)
    rem = {v: g.degree(v) for v in verts}
    cd = {v: [0] * (k + 1) for v in verts}
    assign: dict[CopyRef, int] = {}
    nbrs = {v: g.neighbors(v) for v in verts}

    def final_ok(x: int) -> bool:
        dx = cd[x]
        for w in nbrs[x]:
            if rem[w]:
                continue
            a, b = norm(x, w)
            dw = cd[w]
            for c in range(g.mu(a, b)):
                col = assign[(a, b, c)]
                if dx[col] == dw[col]:
                    return False
        return True

    def rec(i: int, maxcol: int) -> bool:
        stats.tick("coloring search")
        if i == ncopy:
            return accept is None or accept(assign)
        u, v, c = copies[i]
        lo = assign[(u, v, c - 1)] if c else 1
        hi = min(k, maxcol + 1)
        du, dv = cd[u], cd[v]
        for col in range(lo, hi + 1):
            assign[(u, v, c)] = col
            du[col] += 1
            dv[col] += 1
            rem[u] -= 1
            rem[v] -= 1
            good = (rem[u] or final_ok(u)) and (rem[v] or final_ok(v))
            if good and rec(i + 1, max(maxcol, col)):
                return True
            du[col] -= 1
            dv[col] -= 1
            rem[u] += 1
            rem[v] += 1
            del assign[(u, v, c)]
        return False

    return dict(assign) if rec(0, 0) else None


def find_lir_coloring(
    g: Multigraph,
    k: int,
    budget_nodes: int | None = None,
    accept: Callable[[Multigraph, Mapping[CopyRef, int]], bool] | None = None,
    stats: SearchStats | None = None,
) -> EdgeColoring | None:
    """A locally irregular coloring with colors ``1..k``, or ``None`` if none exists.

    Components are searched independently. ``accept(component, coloring)`` can
    reject otherwise valid colorings (e.g. to enforce extra invariants); the
    search then backtracks.
    """
    if k < 1:
        raise GraphError("k must be at least 1")
    if stats is None:
        stats = SearchStats(budget=budget_nodes if budget_nodes is not None else default_budget())
    out: dict[CopyRef, int] = {}
    for comp in g.components():
        cset = set(comp)
        sub = g.induced_on_pairs([p for p in g.pairs if p[0] in cset])
        acc = None if accept is None else (lambda a, sub=sub: accept(sub, a))
        res = _color_component(g, comp, k, stats, acc)
        if res is None:
            stats.exhausted = True
            return None
        out.update(res)
    stats.exhausted = False
    return EdgeColoring(out)


def exact_lir(g: Multigraph, k_max: int = 4, budget_nodes: int | None = None) -> LirResult:
    """Smallest number of colors of a locally irregular coloring, with a witness.

    Each ``k`` below the answer is refuted by an exhausted search. When no
    coloring with ``k_max`` colors exists the graph is reported uncolorable only
    if ``k_max`` reaches the copy count of some failing component; otherwise
    :class:`LirUnknown` is raised.
    """
    if k_max < 1:
        raise GraphError("k_max must be at least 1")
    stats = SearchStats(budget=budget_nodes if budget_nodes is not None else default_budget())
    if g.m == 0:
        return LirResult(0, EdgeColoring(), 0)
    # a palette larger than a component's copy count never helps that component
    enough = max(sum(g.mu(*p) for p in g.pairs if p[0] in set(c)) for c in g.components())
    for k in range(1, min(k_max, enough) + 1):
        wit = find_lir_coloring(g, k, stats=stats)
        if wit is not None:
            return LirResult(k, wit, stats.nodes)
    if k_max >= enough:
        return LirResult(UNCOLORABLE, None, stats.nodes)
    raise LirUnknown(f"no coloring with at most {k_max} colors; bound too small to decide")


def is_colorable(g: Multigraph, budget_nodes: int | None = None) -> bool:
    return exact_lir(g, k_max=g.num_copies(), budget_nodes=budget_nodes).colorable


# neighbor-sum-distinguishing weightings


def find_nsd_123(g: Multigraph, shift: bool = False, budget_nodes: int | None = None) -> NsdColoring:
    """Edge weights from {1, 2, 3} whose vertex sums differ across every edge.

    With ``shift`` the returned weights are lowered by one (to {0, 1, 2}) and the
    search demands that the shifted sums distinguish neighbors. On regular
    graphs that is the same condition.
    """
    if not g.is_simple():
        raise GraphError("find_nsd_123 expects a simple graph")
    for comp in g.components():
        if len(comp) == 2:
            raise GraphError(f"isolated edge {tuple(comp)} has no distinguishing weighting")
    stats = SearchStats(budget=budget_nodes if budget_nodes is not None else default_budget())
    w: dict[tuple[int, int], int] = {}
    for comp in g.components():
        pairs = _pair_order(g, comp)
        rem = {v: g.simple_degree(v) for v in comp}
        s = {v: -g.simple_degree(v) if shift else 0 for v in comp}

        def done_ok(x: int) -> bool:
            return all(rem[y] or s[y] != s[x] for y in g.neighbors(x))

        def rec(i: int) -> bool:
            stats.tick("nsd search")
            if i == len(pairs):
                return True
            u, v = pairs[i]
            for wt in (1, 2, 3):
                w[(u, v)] = wt
                s[u] += wt
                s[v] += wt
                rem[u] -= 1
                rem[v] -= 1
                if (rem[u] or done_ok(u)) and (rem[v] or done_ok(v)) and rec(i + 1):
                    return True
                s[u] -= wt
                s[v] -= wt
                rem[u] += 1
                rem[v] += 1
            del w[(u, v)]
            return False

        if not rec(0):
            raise GraphError("no {1,2,3} distinguishing weighting found (search exhausted)")
    if shift:
        weights = {p: x - 1 for p, x in w.items()}
    else:
        weights = dict(w)
    sums = [0] * g.n
    for (u, v), x in weights.items():
        sums[u] += x
        sums[v] += x
    return NsdColoring(weights, tuple(sums))


# proper vertex colorings


class ChromaticBoundExceeded(RuntimeError):
    pass


def proper_vertex_coloring(g: Multigraph, k_max: int = 4, budget_nodes: int | None = None) -> VertexColoring:
    """Proper vertex coloring with the fewest classes, at most ``k_max``."""
    stats = SearchStats(budget=budget_nodes if budget_nodes is not None else default_budget())
    n = g.n
    if n == 0:
        return VertexColoring(())
    order = sorted(range(n), key=lambda v: (-g.simple_degree(v), v))
    lower = 2 if g.m else 1
    for k in range(lower, k_max + 1) if g.m else [1]:
        col = [0] * n

        def rec(i: int, maxc: int) -> bool:
            stats.tick("vertex coloring search")
            if i == n:
                return True
            v = order[i]
            used = {col[w] for w in g.neighbors(v)}
            for c in range(1, min(k, maxc + 1) + 1):
                if c not in used:
                    col[v] = c
                    if rec(i + 1, max(maxc, c)):
                        return True
                    col[v] = 0
            return False

        if rec(0, 0):
            return VertexColoring(tuple(col))
    raise ChromaticBoundExceeded(f"graph needs more than {k_max} colors")
