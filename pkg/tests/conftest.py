from __future__ import annotations

import networkx as nx
import pytest

from lirlab.mgraph import Multigraph


def from_nx(h: nx.Graph) -> Multigraph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Multigraph.from_edges(len(idx), [(idx[u], idx[v]) for u, v in h.edges()])


@pytest.fixture(scope="session")
def atlas():
    """All graphs on up to 7 vertices, from networkx's atlas (an independent source)."""
    return list(nx.graph_atlas_g())
