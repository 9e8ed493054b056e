from __future__ import annotations

from collections import Counter
from itertools import product

import pytest

from lirlab.families import complete, cubic_graphs, cycle, enumerate_connected_subcubic, path, star
from lirlab.mgraph import BLUE, RED, GREEN, EdgeColoring, Multigraph, color_degrees, double, multiedge_coloring
from lirlab.oracle import find_lir_coloring, is_colorable
from lirlab.subcubic.casetable import (
    BB,
    FIGURE_OPTIONS,
    RB,
    RR,
    Boundary,
    boundary_options,
    middle_part_casecheck,
)
from lirlab.subcubic.classify import SHAPE_EDGES, ShapeError, classify_mono_components, shape_of
from lirlab.subcubic.decomposition import (
    K13,
    K13DD,
    P3,
    DecompositionError,
    check_decomposition,
    check_phi,
    find_phi,
    pertinent_decomposition,
)
from lirlab.subcubic.independent import ReductionTrace, color_subcubic_independent
from lirlab.subcubic.lift import LiftTrace, lift_double_3
from lirlab.subcubic.paths import (
    SUBCASE_21,
    SUBCASE_22,
    SUBCASE_23,
    ExpansionError,
    expand_edge_to_path,
    expansion_branch,
    standard_path_coloring,
    standard_types,
)
from lirlab.verify import verify, verify_pendant_invariant

# --- decompositions


def test_even_path_uses_p3s():
    d = pertinent_decomposition(path(4))
    assert [el.kind for el in d.elements] == [P3, P3] and d.special is None
    check_decomposition(path(4), d)


def test_claw_is_one_k13():
    d = pertinent_decomposition(star(3))
    assert [el.kind for el in d.elements] == [K13]


def test_subdivided_claw_needs_k13dd():
    # legs of lengths 2, 2, 1 from the hub
    g = Multigraph.from_edges(6, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)])
    d = pertinent_decomposition(g)
    assert d.elements[d.special].kind == K13DD and d.strongly_pertinent


def test_triangle_has_no_decomposition():
    with pytest.raises(DecompositionError):
        pertinent_decomposition(complete(3))


def test_decompositions_partition_edges():
    for n in range(3, 9):
        for g in enumerate_connected_subcubic(n):
            if not is_colorable(g):
                continue
            d = pertinent_decomposition(g)
            edges = sorted(e for el in d.elements for e in el.edges)
            assert edges == g.pairs
            assert sum(el.kind != P3 for el in d.elements) == g.m % 2


def test_phi_examples():
    for g in (cycle(6), complete(4)):
        d = pertinent_decomposition(g)
        ec = find_phi(g, d)
        check_phi(g, d, ec)
        if g.n == 6:
            assert ec.color4_edge_count == 0


def test_special_element_gets_color_one():
    g = Multigraph.from_edges(6, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)])
    d = pertinent_decomposition(g)
    assert find_phi(g, d).phi[d.special] == 1


# --- shapes


def test_shape_examples():
    for name, es in SHAPE_EDGES.items():
        assert shape_of(es) == name
    with pytest.raises(ShapeError):
        shape_of([(0, 1), (1, 2), (2, 0)])
    comps = classify_mono_components({(0, 1): 1, (1, 2): 1, (3, 4): 2, (3, 5): 2, (3, 6): 2})
    assert [(c, s) for c, s, _ in comps] == [(1, "a"), (2, "d")]


# --- lift


def test_lift_without_color_four_is_plain_doubling():
    g = cycle(6)
    d = pertinent_decomposition(g)
    ec = find_phi(g, d)
    assert 4 not in ec.phi
    c = lift_double_3(g, d, ec)
    assert all(len(set(c.multiedge(u, v))) == 1 for u, v in g.pairs)
    assert verify(double(g), c).ok


def test_lift_uses_rule_on_color_four():
    routes = Counter()
    for n in range(4, 9):
        for g in enumerate_connected_subcubic(n):
            if not is_colorable(g):
                continue
            d = pertinent_decomposition(g)
            ec = find_phi(g, d)
            tr = LiftTrace()
            c = lift_double_3(g, d, ec, tr)
            assert tr.parity_ok and verify(double(g), c).ok and c.palette <= {RED, GREEN, BLUE}
            routes.update(tr.routes)
    assert routes["a:rule"] > 0


# --- case table


def test_boundary_options():
    opts = boundary_options()
    assert len(opts) == 15
    assert Boundary(RR, 5, 1) in opts
    counts = Counter(o.kind for o in opts)
    assert counts == {RR: 6, RB: 3, BB: 6}
    # the drawn labels differ only in the blue-blue group
    assert set(FIGURE_OPTIONS) ^ set(opts) == {Boundary(BB, 2, 2), Boundary(BB, 1, 3)}


def test_casetable_complete_and_stable():
    t = middle_part_casecheck()
    assert len(t.rows) == 15**3 and t.extendable == 3375
    assert t.serialize() == middle_part_casecheck().serialize()
    first = t.serialize().splitlines()[0]
    head, body = first.split(" : ")
    assert len(head.split()) == 3 and len(body.split("; ")) == 8
    assert middle_part_casecheck(FIGURE_OPTIONS).extendable == 3375


# --- independent family


def test_claw_223_direct():
    # claw with one leg subdivided twice and two legs subdivided once
    g = Multigraph.from_edges(8, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (0, 6), (6, 7)])
    tr = ReductionTrace()
    c = color_subcubic_independent(g, tr)
    assert verify(double(g), c).ok and verify_pendant_invariant(double(g), c)
    assert tr.routes["base:claw-223"] == 1


def test_triangle_with_pendant():
    g = Multigraph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    tr = ReductionTrace()
    c = color_subcubic_independent(g, tr)
    assert verify(double(g), c).ok and c.palette <= {RED, BLUE}
    assert tr.routes["base:triangle-pendant"] == 1


def test_independent_family_routes():
    tr = ReductionTrace()
    for n in range(3, 10):
        for g in enumerate_connected_subcubic(n):
            if any(g.simple_degree(u) == 3 == g.simple_degree(v) for u, v in g.pairs) or g.n == 2:
                continue
            c = color_subcubic_independent(g, tr)
            assert verify(double(g), c).ok and verify_pendant_invariant(double(g), c)
    for r in ("reduce:pendant-claw", "reduce:pendant-triangle", "reduce:adjacent-twos", "reduce:pendant-path:case1"):
        assert tr.routes[r] > 0


# --- path expansion


@pytest.mark.parametrize("length", [2, 6, 10, 14])
def test_standard_colorings(length):
    ts = standard_types(length)
    assert ts[0] == ts[1] == ts[-1] == ts[-2] == "RR"
    assert verify(double(path(length)), standard_path_coloring(length)).ok
    assert verify(double(path(length)), standard_path_coloring(length, BLUE)).ok


def test_standard_coloring_bad_length():
    with pytest.raises(ExpansionError):
        standard_types(4)


def test_subcases_cover_all_red_degree_pairs():
    pairs = {(a, b) for a in range(1, 6) for b in range(a + 1, 6)}
    assert SUBCASE_21 | SUBCASE_22 | SUBCASE_23 == pairs
    assert not (SUBCASE_21 & SUBCASE_22 or SUBCASE_21 & SUBCASE_23 or SUBCASE_22 & SUBCASE_23)


def _local_graph(tu: tuple[int, int], tv: tuple[int, int], mid: int):
    """u=0, v=1 joined by a red-blue multiedge (mid = 1) or monochromatic one; both have
    two further leaves with the given multiedge types."""
    g = double(Multigraph.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]))
    kind = {2: (RED, RED), 1: (RED, BLUE), 0: (BLUE, BLUE)}
    c = EdgeColoring(multiedge_coloring([((0, 1), kind[mid]), ((0, 2), kind[tu[0]]), ((0, 3), kind[tu[1]]),
                                         ((1, 4), kind[tv[0]]), ((1, 5), kind[tv[1]])]))
    return g, c


def test_synthetic_red_degree_pairs():
    """Every (r_u, r_v) with uv red-blue: the path and its ends are conflict-free for all lengths."""
    seen = set()
    for tu, tv in product(product(range(3), repeat=2), repeat=2):
        g, c = _local_graph(tu, tv, 1)
        deg = color_degrees(g, c)
        ru, rv = deg[0].get(RED, 0), deg[1].get(RED, 0)
        if ru == rv:
            continue
        branch, a, b = expansion_branch(c, g, 0, 1)
        seen.add((min(ru, rv), max(ru, rv)))
        for ell in range(5, 13):
            g2, c2 = _expand_local(g, c, ell)
            local = {0, 1} | set(range(g.n, g2.n))
            bad = [x for x in verify(g2, c2).conflicts if x[0] in local and x[1] in local]
            assert not bad, (tu, tv, ell, branch, bad)
            after = color_degrees(g2, c2)
            assert after[0] == deg[0] and after[1] == deg[1]
    assert len(seen) == 10


def _expand_local(g, c, ell):
    # same construction as expand_edge_to_path, without the whole-graph check that
    # the artificial leaves would fail
    from lirlab.subcubic import paths as P

    branch, a, b = P.expansion_branch(c, g, 0, 1)
    if branch == "case1":
        types = P._case1_types(ell)
        if sorted(c.multiedge(0, 1))[0] == RED:
            types = [P._swap(t) for t in types]
    else:
        table = {"case2.1": P._SUB21, "case2.2": P._SUB22, "case2.3": P._SUB23}[branch]
        types = P._case2_types(ell, table)
    verts = [a] + [g.n + i for i in range(ell - 1)] + [b]
    edges = [(p, q, 2) for (p, q), _ in g.edges if (p, q) != (0, 1)]
    edges += [(verts[i], verts[i + 1], 2) for i in range(ell)]
    g2 = Multigraph.from_edges(g.n + ell - 1, edges)
    out = {k: col for k, col in c.items() if k[:2] != (0, 1)}
    out.update(multiedge_coloring(((verts[i], verts[i + 1]), P._PAIR[t]) for i, t in enumerate(types)))
    return g2, EdgeColoring(out)


def test_figure_pattern_case21_length5():
    g, c = _local_graph((0, 0), (1, 0), 1)  # r_u = 1, r_v = 2
    assert expansion_branch(c, g, 0, 1)[0] == "case2.1"
    g2, c2 = _expand_local(g, c, 5)
    path_types = []
    seq = [0, 6, 7, 8, 9, 1]
    for x, y in zip(seq, seq[1:]):
        path_types.append("".join("R" if col == RED else "B" for col in sorted(c2.multiedge(x, y))))
    assert path_types == ["RB", "RR", "RR", "BB", "RB"]


def test_expand_k4_every_length():
    gg = double(complete(4))
    c = find_lir_coloring(gg, 2)
    for ell in range(5, 13):
        g2, c2 = expand_edge_to_path(gg, c, (0, 1), ell)
        assert verify(g2, c2).ok and g2.n == 4 + ell - 1


def test_expand_errors():
    gg = double(complete(4))
    c = find_lir_coloring(gg, 2)
    with pytest.raises(ExpansionError):
        expand_edge_to_path(gg, c, (0, 1), 4)
    g1, c1 = expand_edge_to_path(gg, c, (0, 1), 5)
    with pytest.raises(ExpansionError):
        expand_edge_to_path(g1, c1, (0, 1), 5)


def test_cubic_branch_coverage():
    stats = Counter()
    for g in cubic_graphs(6):
        gg = double(g)
        c = find_lir_coloring(gg, 2)
        for u, v in g.pairs:
            expand_edge_to_path(gg, c, (u, v), 6, stats)
    assert stats["case1"] > 0
