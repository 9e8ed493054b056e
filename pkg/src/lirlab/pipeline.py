"""Strategy selection: pick a constructor for ^2G, run it, and re-verify the result."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .general import (
    UNDECOMPOSABLE,
    color_planar_double,
    color_regular_double,
    color_split_double,
    split_lir_table,
    split_recognize,
)
from .mgraph import EdgeColoring, GraphError, Multigraph, double, norm
from .oracle import BudgetExceeded, ChromaticBoundExceeded, default_budget, exact_lir, find_lir_coloring, node_meter, proper_vertex_coloring
from .subcubic.decomposition import find_phi, pertinent_decomposition
from .subcubic.independent import color_subcubic_independent
from .subcubic.lift import lift_double_3
from .subcubic.paths import expand_edge_to_path
from .verify import verify

AUTO_ORDER = ("regular", "split", "subcubic-independent", "subcubic3", "planar4", "oracle")
STRATEGIES = ("regular", "split", "bipartite", "planar4", "subcubic3", "subcubic-independent", "long-paths", "oracle")


class NotApplicable(GraphError):
    """The strategy's hypotheses do not hold for this graph."""


@dataclass
class StrategyReport:
    graph_id: str
    n: int
    m: int
    strategy: str
    palette: int
    ok: bool
    nodes: int
    ms: float
    error: str = ""

    def as_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "n": self.n,
            "m": self.m,
            "strategy": self.strategy,
            "palette": self.palette,
            "ok": self.ok,
            "nodes": self.nodes,
            "ms": round(self.ms, 3),
            "error": self.error,
        }


def _is_k2(g: Multigraph) -> bool:
    return g.n == 2 and g.m == 1


def _regular(g: Multigraph, kmax: int) -> EdgeColoring:
    if len({g.simple_degree(v) for v in range(g.n)}) != 1:
        raise NotApplicable("not regular")
    return color_regular_double(g)


def _split(g: Multigraph, kmax: int) -> EdgeColoring:
    p = split_recognize(g)
    if p is None:
        raise NotApplicable("not split")
    if split_lir_table(p, g) == UNDECOMPOSABLE:
        raise NotApplicable("uncolorable split graph")
    return color_split_double(g, p)


def _chi(g: Multigraph, k: int):
    try:
        return proper_vertex_coloring(g, k)
    except ChromaticBoundExceeded:
        raise NotApplicable(f"chromatic number exceeds {k}") from None


def _bipartite(g: Multigraph, kmax: int) -> EdgeColoring:
    return color_planar_double(g, _chi(g, 2))


def _planar4(g: Multigraph, kmax: int) -> EdgeColoring:
    return color_planar_double(g, _chi(g, 4))


def _subcubic3(g: Multigraph, kmax: int) -> EdgeColoring:
    if g.max_degree() > 3:
        raise NotApplicable("not subcubic")
    d = pertinent_decomposition(g)
    return lift_double_3(g, d, find_phi(g, d))


def _subcubic_independent(g: Multigraph, kmax: int) -> EdgeColoring:
    if g.max_degree() > 3:
        raise NotApplicable("not subcubic")
    if any(g.simple_degree(u) == 3 and g.simple_degree(v) == 3 for u, v in g.pairs):
        raise NotApplicable("degree-3 vertices are not independent")
    return color_subcubic_independent(g)


def contract_long_paths(g: Multigraph) -> tuple[Multigraph, list[tuple[int, int, list[int]]]]:
    """Cubic core of a graph whose degree-2 vertices lie on paths of length >= 5
    between degree-3 vertices.

    Returns the core (on the degree-3 vertices, renumbered) and, for every long
    path, its core endpoints and the original inner vertices in order.
    """
    deg = [g.simple_degree(v) for v in range(g.n)]
    if any(x not in (2, 3) for x in deg) or 3 not in deg:
        raise NotApplicable("needs minimum degree 2, maximum degree 3 and a degree-3 vertex")
    core = [v for v in range(g.n) if deg[v] == 3]
    idx = {v: i for i, v in enumerate(core)}
    edges: set[tuple[int, int]] = set()
    chains: list[tuple[int, int, list[int]]] = []
    seen: set[tuple[int, int]] = set()
    for s in core:
        for w in g.neighbors(s):
            if norm(s, w) in seen:
                continue
            inner, prev, cur = [], s, w
            seen.add(norm(s, w))
            while deg[cur] == 2:
                inner.append(cur)
                nxt = next(x for x in g.neighbors(cur) if x != prev)
                prev, cur = cur, nxt
                seen.add(norm(prev, cur))
            if cur == s:
                raise NotApplicable("a path returns to its start")
            e = norm(idx[s], idx[cur])
            if e in edges:
                raise NotApplicable("contraction creates a parallel edge")
            edges.add(e)
            if inner:
                if len(inner) + 1 < 5:
                    raise NotApplicable("a subdivided edge is shorter than five")
                if e != (idx[s], idx[cur]):
                    inner = inner[::-1]
                chains.append((e[0], e[1], inner))
    return Multigraph.from_edges(len(core), sorted(edges)), chains


def _long_paths(g: Multigraph, kmax: int) -> EdgeColoring:
    core_g, chains = contract_long_paths(g)
    core = [v for v in range(g.n) if g.simple_degree(v) == 3]
    cur_g = double(core_g)
    c = find_lir_coloring(cur_g, 2)
    if c is None:
        raise NotApplicable("the cubic core has no red/blue coloring")
    # expansion vertex number -> original vertex
    back = dict(enumerate(core))
    for a, b, inner in chains:
        n0 = cur_g.n
        cur_g, c = expand_edge_to_path(cur_g, c, (a, b), len(inner) + 1)
        # the new vertices run from the path's first end; find which one that is
        first = next(x for x in (a, b) if cur_g.has_edge(x, n0))
        seq = inner if back[first] in g.neighbors(inner[0]) else inner[::-1]
        for i, v in enumerate(seq):
            back[n0 + i] = v
    return EdgeColoring({norm(back[u], back[v]) + (k,): col for (u, v, k), col in c.items()})


def _oracle(g: Multigraph, kmax: int) -> EdgeColoring:
    res = exact_lir(double(g), k_max=kmax)
    if res.witness is None:
        raise GraphError(f"^2G has no coloring with at most {kmax} colors")
    return res.witness


_IMPL: dict[str, Callable[[Multigraph, int], EdgeColoring]] = {
    "regular": _regular,
    "split": _split,
    "bipartite": _bipartite,
    "planar4": _planar4,
    "subcubic3": _subcubic3,
    "subcubic-independent": _subcubic_independent,
    "long-paths": _long_paths,
    "oracle": _oracle,
}


# node budget for trying two colors after a constructor needed more
UPGRADE_BUDGET = 200_000


def _try_two(g: Multigraph) -> EdgeColoring | None:
    try:
        return find_lir_coloring(double(g), 2, budget_nodes=min(UPGRADE_BUDGET, default_budget()))
    except BudgetExceeded:
        return None


def _color_component(g: Multigraph, strategy: str, kmax: int) -> tuple[str, EdgeColoring]:
    if strategy != "auto":
        return strategy, _IMPL[strategy](g, kmax)
    for name in AUTO_ORDER:
        try:
            c = _IMPL[name](g, kmax)
        except NotApplicable:
            continue
        except GraphError:
            # hypotheses held but the constructor could not finish; fall through
            if name == "oracle":
                raise
            continue
        if len(c.palette) > 2 and name != "oracle":
            two = _try_two(g)
            if two is not None:
                return "oracle", two
        return name, c
    raise GraphError("no strategy applies")


def color_double(g: Multigraph, strategy: str = "auto", kmax: int = 4) -> tuple[str, EdgeColoring]:
    """Color ^2G component by component; returns the strategy label and the coloring.

    Raises ``GraphError`` for a K2 component, which has no coloring.
    """
    if strategy != "auto" and strategy not in _IMPL:
        raise GraphError(f"unknown strategy {strategy!r}")
    if not g.is_simple():
        raise GraphError("expected a simple graph")
    names: list[str] = []
    out: dict = {}
    for comp in g.components():
        cset = set(comp)
        sub, idx = g.induced_on_pairs([p for p in g.pairs if p[0] in cset], relabel=True)
        if _is_k2(sub):
            raise GraphError("^2K2 has no locally irregular coloring")
        name, c = _color_component(sub, strategy, kmax)
        inv = {i: v for v, i in idx.items()}
        out.update({norm(inv[u], inv[v]) + (k,): col for (u, v, k), col in c.items()})
        if name not in names:
            names.append(name)
    return "+".join(names) or "oracle", EdgeColoring(out)


def run(graph_id: str, g: Multigraph, strategy: str = "auto", kmax: int = 4) -> tuple[StrategyReport, EdgeColoring | None]:
    """Color ^2G and verify independently; failures become error records."""
    t0 = time.perf_counter()
    with node_meter() as meter:
        try:
            name, c = color_double(g, strategy, kmax)
            err = ""
        except (GraphError, RuntimeError) as e:
            name, c, err = strategy, None, f"{type(e).__name__}: {e}"
    ok = False
    palette = 0
    if c is not None:
        gg = double(g)
        rep = verify(gg, c)
        ok = rep.ok and c.is_total(gg)
        palette = len(c.palette)
        if not ok:
            err = f"verification failed: {rep.describe()}"
            c = None
    ms = (time.perf_counter() - t0) * 1000
    return StrategyReport(graph_id, g.n, g.m, name, palette, ok, meter[0], ms, err), c

