from __future__ import annotations

import random

import pytest

from lirlab.families import complete, cycle, enumerate_connected, path, split_graph, star, wheel
from lirlab.general import (
    UNDECOMPOSABLE,
    RepairError,
    SplitPartition,
    bipartite_split,
    clique_double_coloring,
    color_planar_double,
    color_regular_double,
    color_split_double,
    halves_of,
    is_valid_split,
    split_lir_table,
    split_recognize,
)
from lirlab.mgraph import BLUE, RED, GraphError, Multigraph, color_degrees, double
from lirlab.oracle import ChromaticBoundExceeded, NsdColoring, proper_vertex_coloring
from lirlab.verify import verify

K2 = Multigraph.from_edges(2, [(0, 1)])


def _components_with_one_edge(g: Multigraph) -> int:
    return sum(1 for comp in g.components() if sum(1 for u, v in g.pairs if u in comp) == 1)


def test_regular_k3_red_degrees():
    k3 = complete(3)
    nsd = NsdColoring({(0, 1): 0, (1, 2): 1, (0, 2): 2}, (2, 1, 3))
    c = color_regular_double(k3, nsd)
    deg = color_degrees(double(k3), c)
    assert [d.get(RED, 0) for d in deg] == [2, 1, 3]
    assert [d.get(BLUE, 0) for d in deg] == [2, 3, 1]
    assert verify(double(k3), c).ok


def test_regular_c4_and_errors():
    assert verify(double(cycle(4)), color_regular_double(cycle(4))).ok
    with pytest.raises(GraphError):
        color_regular_double(path(3))
    with pytest.raises(GraphError):
        color_regular_double(K2)


def test_split_recognition_examples():
    k4e = Multigraph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
    p = split_recognize(k4e)
    assert p is not None and len(p.X) == 3 and len(p.Y) == 1 and is_valid_split(k4e, p)
    assert split_recognize(cycle(5)) is None
    p = split_recognize(star(5))
    assert p is not None and len(p.X) == 2 and is_valid_split(star(5), p)


def test_split_recognition_against_brute_force():
    from itertools import combinations

    def brute(g):
        vs = range(g.n)
        for k in range(g.n, 0, -1):
            for X in combinations(vs, k):
                xs = set(X)
                if all(g.has_edge(a, b) for a, b in combinations(X, 2)) and not any(
                    u not in xs and v not in xs for u, v in g.pairs
                ):
                    return k
        return None

    for n in range(2, 7):
        for g in enumerate_connected(n):
            p = split_recognize(g)
            b = brute(g)
            assert (p is None) == (b is None)
            if p is not None:
                assert is_valid_split(g, p) and len(p.X) == b


def test_split_table_examples():
    big = SplitPartition(tuple(range(10)), tuple(range(10, 15)), (5,) + (0,) * 9)
    assert split_lir_table(big) == 2
    dec = SplitPartition(tuple(range(9)), (), tuple(range(8, -1, -1)))
    assert split_lir_table(dec) == 1
    for g in (K2, complete(3), path(3)):
        p = split_recognize(g)
        assert split_lir_table(p, g) == UNDECOMPOSABLE


def test_split_special_cases():
    # clique K6 plus one pendant at each of two clique vertices
    g = split_graph(6, [1, 1, 0, 0, 0, 0])
    c = color_split_double(g)
    assert verify(double(g), c).ok and len(c.palette) <= 2
    g = split_graph(5, [2, 0, 0, 0, 0])
    c = color_split_double(g)
    assert verify(double(g), c).ok and len(c.palette) <= 2
    with pytest.raises(GraphError):
        color_split_double(K2)


@pytest.mark.parametrize("n", range(3, 11))
def test_clique_colorings(n):
    c = clique_double_coloring(n)
    assert verify(double(complete(n)), c).ok and c.palette <= {RED, BLUE}


def test_bipartite_split_k4_rule():
    k4 = complete(4)
    bs = bipartite_split(k4, proper_vertex_coloring(k4))
    assert bs.rule == "chi4"
    assert sorted(bs.g1.pairs + bs.g2.pairs) == k4.pairs
    assert _components_with_one_edge(bs.g1) == _components_with_one_edge(bs.g2) == 0
    assert proper_vertex_coloring(bs.g1, 2).k <= 2 and proper_vertex_coloring(bs.g2, 2).k <= 2


def test_bipartite_split_odd_wheel():
    w = wheel(5)
    vc = proper_vertex_coloring(w)
    assert vc.k == 4
    bs = bipartite_split(w, vc)
    assert _components_with_one_edge(bs.g1) == _components_with_one_edge(bs.g2) == 0


def test_triangle_cannot_be_split():
    k3 = complete(3)
    with pytest.raises(RepairError):
        bipartite_split(k3, proper_vertex_coloring(k3))
    c = color_planar_double(k3)
    assert verify(double(k3), c).ok and len(c.palette) <= 2


def test_planar_examples_and_halves():
    c6 = cycle(6)
    c = color_planar_double(c6)
    assert verify(double(c6), c).ok and len(c.palette) <= 2
    k4 = complete(4)
    c = color_planar_double(k4)
    assert verify(double(k4), c).ok and len(c.palette) <= 4
    a, b = halves_of(c)
    assert not a & b and a | b == set(k4.pairs)
    with pytest.raises(ChromaticBoundExceeded):
        color_planar_double(complete(5))


def test_planar_random_graphs():
    rng = random.Random(11)
    done = 0
    while done < 20:
        n = rng.randint(4, 10)
        es = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.35]
        g = Multigraph.from_edges(n, es)
        if not g.is_connected() or g.m < 2:
            continue
        try:
            vc = proper_vertex_coloring(g, 4)
        except ChromaticBoundExceeded:
            continue
        c = color_planar_double(g, vc)
        assert verify(double(g), c).ok and len(c.palette) <= (2 if vc.k <= 2 else 4)
        done += 1
