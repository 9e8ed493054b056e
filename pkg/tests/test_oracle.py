from __future__ import annotations

import pytest

from lirlab.families import bow_tie, butterfly, complete, cycle, enumerate_connected, path, petersen
from lirlab.mgraph import GraphError, Multigraph, double
from lirlab.oracle import (
    UNCOLORABLE,
    BudgetExceeded,
    ChromaticBoundExceeded,
    LirUnknown,
    exact_lir,
    find_lir_coloring,
    find_nsd_123,
    node_meter,
    proper_vertex_coloring,
)
from lirlab.verify import verify

K2 = Multigraph.from_edges(2, [(0, 1)])
K3 = complete(3)
P4 = path(3)


def test_uncolorable_examples():
    assert exact_lir(double(K2)).value == UNCOLORABLE
    for g in (K2, K3, P4):
        assert exact_lir(g, k_max=g.m).value == UNCOLORABLE
    assert find_lir_coloring(K3, 1) is None


def test_bow_tie_values():
    assert exact_lir(bow_tie()).value == 4
    assert exact_lir(double(bow_tie())).value <= 2
    assert exact_lir(butterfly()).value == 3


def test_unknown_when_bound_too_small():
    with pytest.raises(LirUnknown):
        exact_lir(bow_tie(), k_max=3)


def test_witnesses_and_minimality_small():
    for n in range(2, 6):
        for g in enumerate_connected(n):
            r = exact_lir(double(g), k_max=g.num_copies() * 2)
            if g.n == 2:
                assert r.value == UNCOLORABLE
                continue
            assert r.value <= 2 and verify(double(g), r.witness).ok
            assert r.witness.palette_size <= r.value
            if r.value > 1:
                assert find_lir_coloring(double(g), r.value - 1) is None


def test_two_colorings_of_paths_and_cliques():
    assert verify(double(path(4)), find_lir_coloring(double(path(4)), 2)).ok
    for n in range(3, 9):
        gg = double(complete(n))
        c = find_lir_coloring(gg, 2)
        assert c is not None and verify(gg, c).ok


def test_budget_is_explicit():
    with pytest.raises(BudgetExceeded):
        exact_lir(double(petersen()), budget_nodes=5)


def test_env_budget(monkeypatch):
    monkeypatch.setenv("LIRLAB_BUDGET", "3")
    with pytest.raises(BudgetExceeded):
        find_lir_coloring(double(complete(5)), 2)


def test_node_meter_counts():
    with node_meter() as m:
        exact_lir(double(cycle(5)))
    assert m[0] > 0


def test_accept_hook_forces_backtracking():
    seen = []

    def accept(sub, a):
        seen.append(dict(a))
        return len(seen) > 1

    c = find_lir_coloring(double(path(4)), 2, accept=accept)
    assert c is not None and len(seen) >= 2


def test_nsd_examples():
    r = find_nsd_123(K3)
    assert set(r.weights.values()) <= {1, 2, 3}
    assert len(set(r.sums)) == 3
    with pytest.raises(GraphError):
        find_nsd_123(K2)
    s = find_nsd_123(cycle(4), shift=True)
    assert set(s.weights.values()) <= {0, 1, 2}
    assert all(s.sums[u] != s.sums[v] for u, v in cycle(4).pairs)


def test_vertex_colorings():
    assert proper_vertex_coloring(cycle(4)).k == 2
    assert proper_vertex_coloring(complete(4)).k == 4
    vc = proper_vertex_coloring(petersen())
    assert vc.k == 3
    assert all(vc.classes[u] != vc.classes[v] for u, v in petersen().pairs)
    with pytest.raises(ChromaticBoundExceeded):
        proper_vertex_coloring(complete(5), 4)
