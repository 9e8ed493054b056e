"""Red/blue colorings of ^2G for subcubic G whose degree-3 vertices are independent.

The coloring is built by peeling off small pieces (pendant claws, pendant
paths, pendant triangles, or a vertex of degree three next to two adjacent
vertices of degree two), coloring the rest recursively, and extending. The
recursion keeps a stronger invariant than local irregularity: no pendant
red-blue multiedge ends in a vertex whose red and blue degrees are both three.

Colorings are handled as multiedge types, the number of red copies on a pair
(2 = red-red, 1 = red-blue, 0 = blue-blue).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from ..mgraph import BLUE, RED, EdgeColoring, GraphError, Multigraph, double, multiedge_coloring, norm
from ..oracle import find_lir_coloring
from ..verify import verify, verify_pendant_invariant
from .casetable import Boundary, middle_part_casecheck

RR, RB, BB = 2, 1, 0
Types = dict[tuple[int, int], int]


class ReductionError(GraphError):
    pass


@dataclass
class ReductionTrace:
    routes: Counter = field(default_factory=Counter)
    fallbacks: list = field(default_factory=list)


def check_independent_subcubic(g: Multigraph) -> None:
    if not g.is_simple() or not g.is_connected() or g.m == 0:
        raise GraphError("expected a connected simple graph with at least one edge")
    if g.n == 2:
        raise GraphError("K2 is excluded")
    if g.max_degree() > 3:
        raise GraphError("graph is not subcubic")
    for u, v in g.pairs:
        if g.simple_degree(u) == 3 and g.simple_degree(v) == 3:
            raise GraphError(f"adjacent degree-3 vertices {u}, {v}")


# degree bookkeeping


def _red(g: Multigraph, t: Types, v: int) -> int:
    return sum(t[norm(v, w)] for w in g.neighbors(v))


def _blue(g: Multigraph, t: Types, v: int) -> int:
    return 2 * g.simple_degree(v) - _red(g, t, v)


def types_ok(g: Multigraph, t: Types) -> bool:
    red = [_red(g, t, v) for v in range(g.n)]
    blue = [2 * g.simple_degree(v) - red[v] for v in range(g.n)]
    for (u, v), k in t.items():
        if k > 0 and red[u] == red[v]:
            return False
        if k < 2 and blue[u] == blue[v]:
            return False
    return True


def types_pi_ok(g: Multigraph, t: Types) -> bool:
    for u, v in g.pairs:
        if t[(u, v)] != RB:
            continue
        for leaf, other in ((u, v), (v, u)):
            if g.simple_degree(leaf) == 1 and _red(g, t, other) == 3 and _blue(g, t, other) == 3:
                return False
    return True


def to_coloring(t: Types) -> EdgeColoring:
    cols = {RR: (RED, RED), RB: (RED, BLUE), BB: (BLUE, BLUE)}
    return EdgeColoring(multiedge_coloring((p, cols[k]) for p, k in t.items()))


def from_coloring(g: Multigraph, c) -> Types:
    return {p: sum(1 for k in range(2) if c[(p[0], p[1], k)] == RED) for p in g.pairs}


# searches used for base graphs and as a fallback


def _search_whole(g: Multigraph) -> Types | None:
    def accept(sub, assign):
        t = {p: sum(1 for k in range(2) if assign[(p[0], p[1], k)] == RED) for p in sub.pairs}
        return types_pi_ok(sub, t)

    c = find_lir_coloring(double(g), 2, accept=accept)
    return None if c is None else from_coloring(g, c)


def _search_extension(g: Multigraph, fixed: Types) -> Types | None:
    """Types for the pairs missing from ``fixed`` so that the whole is valid."""
    free = [p for p in g.pairs if p not in fixed]
    t = dict(fixed)

    def rec(i: int) -> bool:
        if i == len(free):
            return types_ok(g, t) and types_pi_ok(g, t)
        for k in (RR, RB, BB):
            t[free[i]] = k
            if rec(i + 1):
                return True
        del t[free[i]]
        return False

    return dict(t) if rec(0) else None


# shape helpers


def _is_tree(g: Multigraph) -> bool:
    return g.m == g.n - 1


def _leg(g: Multigraph, hub: int, first: int) -> list[int] | None:
    """Vertices of the path leaving ``hub`` through ``first`` up to a leaf, or None."""
    out = [first]
    prev, cur = hub, first
    while g.simple_degree(cur) == 2:
        nxt = [w for w in g.neighbors(cur) if w != prev][0]
        if nxt == hub or nxt in out:
            return None
        out.append(nxt)
        prev, cur = cur, nxt
    return out if g.simple_degree(cur) == 1 else None


def _mono(g: Multigraph, k: int) -> Types:
    return {p: k for p in g.pairs}


def _alternating(start: int, count: int) -> list[int]:
    other = RR + BB - start
    return [start if (i // 2) % 2 == 0 else other for i in range(count)]


# base graphs


def _base(g: Multigraph, trace: ReductionTrace) -> Types | None:
    degs = [g.simple_degree(v) for v in range(g.n)]
    if max(degs) <= 2:
        trace.routes["base:path" if _is_tree(g) else "base:cycle"] += 1
        return _search_whole(g)
    hubs = [v for v in range(g.n) if degs[v] == 3]
    if _is_tree(g) and len(hubs) == 1:
        h = hubs[0]
        legs = [_leg(g, h, w) for w in g.neighbors(h)]
        lens = sorted(len(x) for x in legs)
        if lens[-1] <= 2:
            trace.routes["base:claw"] += 1
            return _mono(g, BB)
        if lens == [2, 2, 3]:
            trace.routes["base:claw-223"] += 1
            long = [x for x in legs if len(x) == 3][0]
            t = _mono(g, RR)
            t[norm(long[0], long[1])] = BB
            t[norm(long[1], long[2])] = BB
            return t
    if g.n == 4 and g.m == 4 and sorted(degs) == [1, 2, 2, 3]:
        t3 = hubs[0]
        p = [v for v in g.neighbors(t3) if degs[v] == 1][0]
        t1, t2 = sorted(v for v in g.neighbors(t3) if v != p)
        trace.routes["base:triangle-pendant"] += 1
        return {norm(t1, t2): BB, norm(t2, t3): BB, norm(t1, t3): RR, norm(t3, p): RR}
    return None


# reductions


def _solve_rest(g: Multigraph, dead: set[int], trace: ReductionTrace, table) -> Types | None:
    """Solve every component of ``g - dead``; None if one of them is an edge or a
    lone vertex that carried an edge of ``g``."""
    h, idx = g.delete_vertices(dead)
    if any(h.simple_degree(v) == 0 for v in range(h.n)):
        return None  # a vertex would lose all its edges
    back = {i: v for v, i in idx.items()}
    subs = []
    for comp in h.components():
        cs = set(comp)
        sub, sidx = h.induced_on_pairs([p for p in h.pairs if p[0] in cs], relabel=True)
        if sub.m < 2:
            return None
        subs.append((sub, {i: back[v] for v, i in sidx.items()}))
    out: Types = {}
    for sub, sback in subs:
        for (a, b), k in _solve(sub, trace, table).items():
            out[norm(sback[a], sback[b])] = k
    return out


def _pendant_claw(g: Multigraph, trace: ReductionTrace, table) -> Types | None:
    for h in range(g.n):
        if g.simple_degree(h) != 3:
            continue
        for a in g.neighbors(h):
            if g.simple_degree(a) != 2:
                continue
            others = [x for x in g.neighbors(h) if x != a]
            legs = [_leg(g, h, x) for x in others]
            if any(leg is None or len(leg) > 2 for leg in legs):
                continue
            (w,) = [x for x in g.neighbors(a) if x != h]
            dead = {h} | {x for leg in legs for x in leg}
            if w in dead:
                continue
            rest = _solve_rest(g, dead, trace, table)
            if rest is None:
                continue
            t = rest
            k = t[norm(a, w)]
            if k == RR:
                col = BB
            elif k == BB:
                col = RR
            else:
                col = RR if _red(g, t, w) != 3 else BB
            t[norm(h, a)] = col
            for leg in legs:
                prev = h
                for x in leg:
                    t[norm(prev, x)] = col
                    prev = x
            trace.routes["reduce:pendant-claw"] += 1
            return t
    return None


def _case1_path(L: int) -> list[int]:
    # boundary blue, v1 edges red: odd -> RR, BB BB RR RR ...; even -> RR RR, BB BB ...
    if L % 2:
        return [RR] + _alternating(BB, L - 1)
    return [RR, RR] + _alternating(BB, L - 2)


def _sub21_path(L: int) -> list[int]:
    # v1 edge red-blue: odd -> RB, BB BB RR RR ...; even -> RB, BB, RR RR BB BB ...
    if L % 2:
        return [RB] + _alternating(BB, L - 1)
    return [RB, BB] + _alternating(RR, L - 2)


def _flip(ts: list[int]) -> list[int]:
    return [RR + BB - k for k in ts]


def _pendant_path(g: Multigraph, trace: ReductionTrace, table) -> Types | None:
    for v1 in range(g.n):
        if g.simple_degree(v1) != 3:
            continue
        for p1 in g.neighbors(v1):
            path = _leg(g, v1, p1)
            if path is None:
                continue
            v0, v2 = [x for x in g.neighbors(v1) if x != p1]
            if g.simple_degree(v0) != 2 or g.simple_degree(v2) != 2:
                continue
            rest = _solve_rest(g, {v1, *path}, trace, table)
            if rest is None:
                continue
            t = rest
            res = _extend_pendant_path(g, t, v0, v1, v2, path, trace)
            if res is not None:
                return res
    return None


def _extend_pendant_path(g, t: Types, v0, v1, v2, path, trace) -> Types | None:
    (x,) = [w for w in g.neighbors(v0) if w != v1]
    (z,) = [w for w in g.neighbors(v2) if w != v1]
    e0, e2 = t[norm(v0, x)], t[norm(v2, z)]
    L = len(path)

    def put(t0: int, t2: int, ptypes: list[int]) -> Types:
        out = dict(t)
        out[norm(v0, v1)] = t0
        out[norm(v1, v2)] = t2
        prev = v1
        for y, k in zip(path, ptypes):
            out[norm(prev, y)] = k
            prev = y
        return out

    cand: list[tuple[str, Types]] = []
    mono = {RR, BB}
    if e0 in mono and e2 in mono and e0 == e2:
        ps = _case1_path(L)
        if e0 == BB:
            cand.append(("case1", put(RR, RR, ps)))
        else:
            cand.append(("case1", put(BB, BB, _flip(ps))))
    elif e0 in mono and e2 in mono:
        # orient so that the blue-blue boundary sits at a and red-red at b
        if e0 == BB:
            a, b, xa, zb = v0, v2, x, z
        else:
            a, b, xa, zb = v2, v0, z, x
        zr = _red(g, t, zb)
        xb = _blue(g, t, xa)

        def put_ab(ta: int, tb: int, ps: list[int]) -> Types:
            return put(ta, tb, ps) if a == v0 else put(tb, ta, ps)

        if zr != 3:
            cand.append(("case2.1", put_ab(RR, RB, _sub21_path(L))))
        elif xb != 3:
            cand.append(("case2.2", put_ab(RB, BB, _flip(_sub21_path(L)))))
        else:
            cand.append(("case2.3", put_ab(BB, BB, _flip(_case1_path(L)))))
    elif e0 == RB and e2 == RB:
        xr, zr = _red(g, t, x), _red(g, t, z)
        xb, zb = _blue(g, t, x), _blue(g, t, z)
        if xr != 3 and zr != 3:
            cand.append(("case4", put(RR, RR, _case1_path(L))))
        if xb != 3 and zb != 3:
            cand.append(("case4", put(BB, BB, _flip(_case1_path(L)))))
    else:
        mono_end = e2 if e0 == RB else e0
        if mono_end == BB:
            cand.append(("case3", put(RR, RR, _case1_path(L))))
        else:
            cand.append(("case3", put(BB, BB, _flip(_case1_path(L)))))
    for name, out in cand:
        if types_ok(g, out) and types_pi_ok(g, out):
            trace.routes[f"reduce:pendant-path:{name}"] += 1
            return out
    ext = _search_extension(g, t)
    if ext is not None:
        trace.routes["reduce:pendant-path:search"] += 1
    return ext


def _pendant_triangle(g: Multigraph, trace: ReductionTrace, table) -> Types | None:
    for v3 in range(g.n):
        if g.simple_degree(v3) != 3:
            continue
        nb = g.neighbors(v3)
        for v1 in nb:
            for v2 in nb:
                if not v1 < v2 or not g.has_edge(v1, v2):
                    continue
                if g.simple_degree(v1) != 2 or g.simple_degree(v2) != 2:
                    continue
                (v4,) = [w for w in nb if w not in (v1, v2)]
                if g.simple_degree(v4) != 2:
                    continue
                rest = _solve_rest(g, {v1, v2, v3}, trace, table)
                if rest is None:
                    continue
                t = rest
                (w,) = [y for y in g.neighbors(v4) if y != v3]
                k = t[norm(v4, w)]
                if k == RB:
                    y_col = RR if _red(g, t, w) != 3 else BB
                else:
                    y_col = RR + BB - k
                x_col = RR + BB - y_col
                t[norm(v3, v4)] = y_col
                t[norm(v1, v3)] = y_col
                t[norm(v1, v2)] = x_col
                t[norm(v2, v3)] = x_col
                trace.routes["reduce:pendant-triangle"] += 1
                return t
    return None


def _adjacent_twos(g: Multigraph, trace: ReductionTrace, table) -> Types | None:
    deg = g.simple_degree
    for v1 in range(g.n):
        if deg(v1) != 2:
            continue
        for v2 in g.neighbors(v1):
            if deg(v2) != 2:
                continue
            (v0,) = [w for w in g.neighbors(v1) if w != v2] or [None]
            if v0 is None or deg(v0) != 3:
                continue
            x0, y0 = [w for w in g.neighbors(v0) if w != v1]
            if deg(x0) != 2 or deg(y0) != 2 or v2 in (x0, y0):
                continue
            (x1,) = [w for w in g.neighbors(x0) if w != v0]
            (y1,) = [w for w in g.neighbors(y0) if w != v0]
            (z,) = [w for w in g.neighbors(v2) if w != v1]
            inner = {v0, v1, v2, x0, y0}
            if inner & {x1, y1, z}:
                continue
            rest = _solve_rest(g, {v0, v1}, trace, table)
            if rest is None:
                continue
            t = rest
            bnd = []
            for leaf, far in ((x0, x1), (y0, y1), (v2, z)):
                bnd.append(Boundary(t[norm(leaf, far)], _red(g, t, far), _blue(g, t, far)))
            try:
                ext = table.lookup(*bnd)
            except KeyError:
                raise ReductionError(f"boundary {bnd} is outside the tabulated options") from None
            if ext is None:
                raise ReductionError(f"no tabulated extension for {bnd}")
            for (a, b), k in zip(((x0, v0), (y0, v0), (v0, v1), (v1, v2)), ext):
                t[norm(a, b)] = k
            trace.routes["reduce:adjacent-twos"] += 1
            return t
    return None


def _is_subdivided_cubic(g: Multigraph) -> bool:
    deg = [g.simple_degree(v) for v in range(g.n)]
    if any(d not in (2, 3) for d in deg):
        return False
    return all({deg[u], deg[v]} == {2, 3} for u, v in g.pairs)


@lru_cache(maxsize=1)
def _table():
    return middle_part_casecheck()


def _solve(g: Multigraph, trace: ReductionTrace, table) -> Types:
    t = _base(g, trace)
    if t is None:
        for step in (_pendant_claw, _pendant_path, _pendant_triangle, _adjacent_twos):
            t = step(g, trace, table)
            if t is not None:
                break
    if t is None and _is_subdivided_cubic(g):
        trace.routes["base:subdivided-cubic"] += 1
        t = _search_whole(g)
    if t is None:
        trace.routes["fallback:search"] += 1
        trace.fallbacks.append(g)
        t = _search_whole(g)
        if t is None:
            raise ReductionError(f"no red/blue coloring with the pendant invariant for {g}")
    if not (types_ok(g, t) and types_pi_ok(g, t)):
        raise ReductionError(f"reduction step produced an invalid coloring for {g}")
    return t


def color_subcubic_independent(g: Multigraph, trace: ReductionTrace | None = None) -> EdgeColoring:
    """Red/blue coloring of ^2G satisfying the pendant invariant."""
    check_independent_subcubic(g)
    if trace is None:
        trace = ReductionTrace()
    t = _solve(g, trace, _table())
    c = to_coloring(t)
    gg = double(g)
    if not verify(gg, c).ok or not verify_pendant_invariant(gg, c):
        raise ReductionError("final coloring failed verification")
    return c
