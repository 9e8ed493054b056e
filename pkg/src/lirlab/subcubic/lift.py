"""Three-color coloring of ^2G from an element coloring with colors 1..4."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product

from ..mgraph import BLUE, GREEN, RED, EdgeColoring, GraphError, Multigraph, double, multiedge_coloring, norm
from ..verify import verify, verify_property_P
from .classify import shape_of
from .decomposition import ElementColoring, PertinentDecomposition

# element color -> multiedge color in the first step
STEP1 = {1: BLUE, 2: GREEN, 3: RED}
PALETTE = (RED, GREEN, BLUE)
MULTI = list(combinations_with_replacement(sorted(PALETTE), 2))


class LiftError(GraphError):
    pass


@dataclass
class LiftTrace:
    routes: Counter = field(default_factory=Counter)
    parity_ok: bool = True


def _other_two(col: int) -> tuple[int, int]:
    a, b = (c for c in PALETTE if c != col)
    return a, b


def _elements_at(d: PertinentDecomposition, v: int, skip: set[int]) -> list[int]:
    return [i for i, el in enumerate(d.elements) if i not in skip and v in el.vertices]


def _rule_a(d: PertinentDecomposition, phi, i: int) -> dict:
    p = d.elements[i]
    c = p.central
    qs = [j for j in _elements_at(d, c, {i}) if c in d.elements[j].pendants]
    if not qs:
        pair = (RED, BLUE)
    else:
        pair = _other_two(STEP1[phi[qs[0]]])
    return {e: pair for e in p.edges}


def _rules_b(d: PertinentDecomposition, phi, i: int, j: int) -> list[dict]:
    """Candidate colorings of two adjacent color-4 paths, following the two cases
    of the argument; empty when the surroundings match neither case."""
    e1, e2 = d.elements[i], d.elements[j]
    if e1.central not in e2.pendants:
        e1, e2 = e2, e1
        i, j = j, i
    if e1.central not in e2.pendants:
        return []
    c1 = e1.central
    a, b = e1.pendants
    out: list[dict] = []
    col = lambda k: STEP1[phi[k]]  # noqa: E731
    at_a = _elements_at(d, a, {i, j})
    at_b = _elements_at(d, b, {i, j})
    # Case 1: one pendant of p1 is the centre of s1, the other is a pendant of s2 and s3
    for x, y, at_x, at_y in ((a, b, at_a, at_b), (b, a, at_b, at_a)):
        s1 = [k for k in at_x if d.elements[k].central == x]
        if len(at_x) == 1 and s1 and len(at_y) == 2 and all(y in d.elements[k].pendants for k in at_y):
            cs1 = col(s1[0])
            cols = [col(k) for k in at_y]
            if len({cs1, *cols}) != 3:
                continue
            for s2c, s3c in (cols, cols[::-1]):
                rule = {e: (cs1, s3c) for e in e1.edges}
                rule.update({e: (cs1, s2c) for e in e2.edges})
                out.append(rule)
    # Case 2: two further elements at each pendant of p1, sharing exactly one color
    if len(at_a) == 2 and len(at_b) == 2:
        ca = {col(k) for k in at_a}
        cb = {col(k) for k in at_b}
        if len(ca) == 2 and len(cb) == 2 and len(ca & cb) == 1:
            (only_a,) = ca - cb
            (only_b,) = cb - ca
            rule = {norm(a, c1): (only_b, only_b), norm(c1, b): (only_a, only_a)}
            rule.update({e: (only_a, only_b) for e in e2.edges})
            out.append(rule)
    return out


def lift_double_3(
    g: Multigraph,
    d: PertinentDecomposition,
    ec: ElementColoring,
    trace: LiftTrace | None = None,
) -> EdgeColoring:
    """Red/green/blue coloring of ^2G.

    Step one doubles every edge of element color 1, 2 or 3 monochromatically.
    Each color-4 component (a path of length two, or two such paths) is then
    colored by the local rules; if a rule does not apply or would create a
    conflict, the component's multiedges are searched directly. Components are
    handled in a backtracking loop so a later component can revise an earlier
    choice.
    """
    if trace is None:
        trace = LiftTrace()
    phi = ec.phi
    gg = double(g)
    col4: dict[tuple[int, int], int] = {}
    fixed: dict[tuple[int, int], tuple[int, int]] = {}
    for i, el in enumerate(d.elements):
        for e in el.edges:
            if phi[i] == 4:
                col4[e] = i
            else:
                fixed[e] = (STEP1[phi[i]],) * 2
    # parity observation after step one
    deg1 = [Counter() for _ in range(g.n)]
    for (u, v), pair in fixed.items():
        for c in pair:
            deg1[u][c] += 1
            deg1[v][c] += 1
    trace.parity_ok = all(x % 2 == 0 for dv in deg1 for x in dv.values())

    # group color-4 elements into components
    comp_of: dict[int, int] = {}
    groups: list[list[int]] = []
    for i in sorted(set(col4.values())):
        if i in comp_of:
            continue
        stack, grp = [i], []
        comp_of[i] = len(groups)
        while stack:
            x = stack.pop()
            grp.append(x)
            for j in sorted(set(col4.values())):
                if j not in comp_of and d.elements[x].vertices & d.elements[j].vertices:
                    comp_of[j] = len(groups)
                    stack.append(j)
        groups.append(sorted(grp))

    plans = []
    for grp in groups:
        edges = sorted(e for k in grp for e in d.elements[k].edges)
        shape = shape_of(edges)
        if shape == "a":
            rules = [_rule_a(d, phi, grp[0])]
        elif shape == "b":
            rules = _rules_b(d, phi, grp[0], grp[1])
        else:
            raise LiftError(f"color-4 component of shape ({shape}); element coloring is not minimal")
        plans.append((shape, edges, rules))

    assign = dict(fixed)
    verts_of = [sorted({x for e in edges for x in e}) for _, edges, _ in plans]
    # vertex -> index of the last plan touching it, to know when a degree is final
    last = {}
    for k, vs in enumerate(verts_of):
        for v in vs:
            last[v] = k
    nbrs = {v: g.neighbors(v) for v in range(g.n)}

    def final(v: int, k: int) -> bool:
        return last.get(v, -1) <= k

    def degs(v: int) -> Counter:
        cnt = Counter()
        for w in nbrs[v]:
            pr = assign.get(norm(v, w))
            if pr:
                cnt.update(pr)
        return cnt

    watched = {x for i, el in enumerate(d.elements) if phi[i] != 4 for x in el.pendants}

    def local_ok(k: int) -> bool:
        for v in verts_of[k]:
            if not final(v, k):
                continue
            dv = degs(v)
            if v in watched and 5 in dv.values():
                return False
            for w in nbrs[v]:
                if not final(w, k):
                    continue
                dw = degs(w)
                for c in set(assign[norm(v, w)]):
                    if dv[c] == dw[c]:
                        return False
        return True

    routes: list[str] = [""] * len(plans)

    def rec(k: int) -> bool:
        if k == len(plans):
            return True
        shape, edges, rules = plans[k]
        tried = []
        for r in rules:
            tried.append(tuple(r[e] for e in edges))
            assign.update(r)
            if local_ok(k):
                routes[k] = f"{shape}:rule"
                if rec(k + 1):
                    return True
            for e in edges:
                del assign[e]
        for combo in product(MULTI, repeat=len(edges)):
            if combo in tried:
                continue
            assign.update(zip(edges, combo))
            if local_ok(k):
                routes[k] = f"{shape}:search"
                if rec(k + 1):
                    return True
            for e in edges:
                del assign[e]
        return False

    if not rec(0):
        raise LiftError("no completion of the color-4 components exists")
    trace.routes.update(routes)
    c = EdgeColoring(multiedge_coloring(assign.items()))
    rep = verify(gg, c)
    if not rep.ok:
        raise LiftError(f"lifted coloring has conflicts: {rep.describe()}")
    if not verify_property_P(gg, c, d, list(phi)):
        raise LiftError("lifted coloring violates the pendant degree-five property")
    return c
