"""Replacing an edge between two degree-3 vertices by a long path, keeping two colors."""

from __future__ import annotations

from collections import Counter

from ..mgraph import BLUE, RED, EdgeColoring, GraphError, Multigraph, color_degrees, multiedge_coloring, norm
from ..verify import verify

RR, RB, BB = "RR", "RB", "BB"

# Base sequences for the red-blue case, listed from u to v for lengths 5..8.
# A starred entry belongs to the adjacent pair replaced by a standard block for
# longer paths.
_SUB21 = {
    5: ["RB", "RR*", "RR*", "BB", "RB"],
    6: ["RB", "RR*", "RR*", "BB", "BB", "RB"],
    7: ["RB", "RR*", "RR*", "RB", "BB", "BB", "RB"],
    8: ["RB", "RR*", "RR*", "RB", "RB", "BB", "BB", "RB"],
}
_SUB22 = {
    5: ["RB", "RB", "BB*", "BB*", "RB"],
    6: ["RB", "RB", "RR", "BB*", "BB*", "RB"],
    7: ["RB", "RB", "RR", "RR", "BB*", "BB*", "RB"],
    8: ["RB", "RB", "RR", "RR", "RB", "BB*", "BB*", "RB"],
}
_SUB23 = {
    5: ["RB", "RR*", "RR*", "RB", "RB"],
    6: ["RB", "RR*", "RR*", "BB", "RB", "RB"],
    7: ["RB", "RR*", "RR*", "BB", "BB", "RB", "RB"],
    8: ["RB", "RR*", "RR*", "BB", "BB", "RR", "RB", "RB"],
}
SUBCASE_21 = {(1, 2), (1, 4), (1, 5), (2, 4), (2, 5), (4, 5)}
SUBCASE_22 = {(3, 4), (3, 5)}
SUBCASE_23 = {(1, 3), (2, 3)}

_PAIR = {RR: (RED, RED), RB: (RED, BLUE), BB: (BLUE, BLUE)}


class ExpansionError(GraphError):
    pass


def standard_types(length: int, start: str = RR) -> list[str]:
    """Multiedge types of the standard coloring: pairs of ``start``, then pairs of the
    other color, ending with a pair of ``start``."""
    if length < 2 or length % 4 != 2:
        raise ExpansionError("standard colorings exist for lengths 4k + 2 only")
    other = BB if start == RR else RR
    return [start if (i // 2) % 2 == 0 else other for i in range(length)]


def standard_path_coloring(length: int, start: int = RED) -> EdgeColoring:
    """Standard coloring of the doubled path 0-1-...-length."""
    ts = standard_types(length, RR if start == RED else BB)
    if start not in (RED, BLUE):
        raise ExpansionError("start color must be red or blue")
    return EdgeColoring(multiedge_coloring(((i, i + 1), _PAIR[t]) for i, t in enumerate(ts)))


def _swap(t: str) -> str:
    return {RR: BB, BB: RR, RB: RB}[t]


def _case1_types(ell: int) -> list[str]:
    """u side first; uv was blue-blue, with u's blue degree not four."""
    rest = ell - 3
    r = rest % 4
    if r == 2:
        mid = standard_types(rest)
    elif r == 3:
        mid = [RB] + standard_types(rest - 1)
    elif r == 0:
        mid = [RB, RB] + standard_types(rest - 2)
    else:
        mid = [RB, RB, BB] + standard_types(rest - 3)
    return [BB, BB] + mid + [BB]


def _case2_types(ell: int, table: dict[int, list[str]]) -> list[str]:
    base = 5 + (ell - 5) % 4
    seq = table[base]
    extra = ell - base
    out: list[str] = []
    i = 0
    while i < len(seq):
        t = seq[i]
        if t.endswith("*") and extra:
            kind = t[:2]
            out.extend(standard_types(extra + 2, kind))
            i += 2
            extra = 0
            continue
        out.append(t.rstrip("*"))
        i += 1
    return out


def expansion_branch(c: EdgeColoring, g: Multigraph, u: int, v: int) -> tuple[str, int, int]:
    """Which branch applies to the multiedge uv, with its endpoints in path order."""
    cols = sorted(c.multiedge(u, v))
    deg = color_degrees(g, c)
    if cols[0] == cols[1]:
        x = cols[0]
        du, dv = deg[u].get(x, 0), deg[v].get(x, 0)
        if du != 4 and dv != 2:
            return "case1", u, v
        return "case1", v, u
    ru, rv = deg[u].get(RED, 0), deg[v].get(RED, 0)
    a, b = (u, v) if ru < rv else (v, u)
    pair = (min(ru, rv), max(ru, rv))
    if pair in SUBCASE_21:
        return "case2.1", a, b
    if pair in SUBCASE_22:
        return "case2.2", a, b
    if pair in SUBCASE_23:
        return "case2.3", a, b
    raise ExpansionError(f"red degrees {pair} fit no subcase")


def expand_edge_to_path(
    g1: Multigraph, c1: EdgeColoring, uv: tuple[int, int], ell: int, stats: Counter | None = None
) -> tuple[Multigraph, EdgeColoring]:
    """Replace the multiedge uv by a path of length ``ell`` with new vertices
    ``g1.n, g1.n + 1, ...`` numbered from the path's u-side end."""
    if ell < 5:
        raise ExpansionError("path length must be at least five")
    u, v = uv
    if not g1.has_edge(u, v) or g1.mu(u, v) != 2:
        raise ExpansionError(f"{u}-{v} is not a multiedge of a 2-multigraph")
    if g1.simple_degree(u) != 3 or g1.simple_degree(v) != 3:
        raise ExpansionError("both ends must have degree three")
    if not verify(g1, c1).ok or not c1.palette <= {RED, BLUE}:
        raise ExpansionError("input must be a verified red/blue coloring")
    branch, a, b = expansion_branch(c1, g1, u, v)
    cols = sorted(c1.multiedge(u, v))
    if branch == "case1":
        types = _case1_types(ell)
        if cols[0] == RED:
            types = [_swap(t) for t in types]
    else:
        table = {"case2.1": _SUB21, "case2.2": _SUB22, "case2.3": _SUB23}[branch]
        types = _case2_types(ell, table)
    if stats is not None:
        stats[branch] += 1
    n0 = g1.n
    verts = [a] + [n0 + i for i in range(ell - 1)] + [b]
    edges = [(p, q, 2) for (p, q), _ in g1.edges if norm(p, q) != norm(u, v)]
    edges += [(verts[i], verts[i + 1], 2) for i in range(ell)]
    g2 = Multigraph.from_edges(n0 + ell - 1, edges)
    out = {k: col for k, col in c1.items() if (k[0], k[1]) != norm(u, v)}
    out.update(multiedge_coloring(((verts[i], verts[i + 1]), _PAIR[t]) for i, t in enumerate(types)))
    c2 = EdgeColoring(out)
    rep = verify(g2, c2)
    if not rep.ok:
        raise ExpansionError(f"{branch} expansion of length {ell} has conflicts: {rep.describe()}")
    return g2, c2
