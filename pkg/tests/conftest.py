from __future__ import annotations

import random

import networkx as nx
import pytest

from vtorb.graph import Graph, graph_from_edges, is_connected

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return graph_from_edges(len(idx), [(idx[u], idx[v]) for u, v in h.edges()])


def nx_automorphisms(g: Graph) -> set[tuple]:
    h = to_nx(g)
    gm = nx.algorithms.isomorphism.GraphMatcher(h, h)
    return {tuple(m[v] for v in range(g.n)) for m in gm.isomorphisms_iter()}


def random_graph(rng: random.Random, n: int, p: float, connected: bool = False) -> Graph:
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = graph_from_edges(n, edges)
        if not connected or is_connected(g):
            return g


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, msg = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {msg}")
