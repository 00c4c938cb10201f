"""Simple graphs and digraphs on the dense vertex set ``0..n-1``."""

from __future__ import annotations

from collections import deque
from typing import Iterable


class GraphError(ValueError):
    """Invalid graph input (loop, out-of-range endpoint, bad parameters)."""


class Graph:
    """Immutable undirected simple graph with sorted adjacency lists."""

    __slots__ = ("n", "adj", "_edge_set", "_hash")

    def __init__(self, n: int, adj: Iterable[Iterable[int]]):
        self.n = n
        self.adj = tuple(tuple(a) for a in adj)
        self._edge_set = None
        self._hash = None

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u]]

    def has_edge(self, u: int, v: int) -> bool:
        if self._edge_set is None:
            self._edge_set = frozenset(self.arcs())
        return (u, v) in self._edge_set

    def valence(self) -> int | None:
        """Common degree if the graph is regular, else None."""
        if self.n == 0:
            return 0
        d = len(self.adj[0])
        return d if all(len(a) == d for a in self.adj) else None

    def relabel(self, images) -> "Graph":
        """The graph with vertex ``v`` renamed ``images[v]``."""
        return graph_from_edges(self.n, [(images[u], images[v]) for u, v in self.edges()])


class Digraph:
    """Immutable loopless digraph without parallel arcs."""

    __slots__ = ("n", "out")

    def __init__(self, n: int, out: Iterable[Iterable[int]]):
        self.n = n
        self.out = tuple(tuple(a) for a in out)

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={self.num_arcs})"

    def __eq__(self, other):
        return isinstance(other, Digraph) and self.n == other.n and self.out == other.out

    def __hash__(self):
        return hash((self.n, self.out))

    @property
    def num_arcs(self) -> int:
        return sum(len(a) for a in self.out)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.out[u]]

    def out_degree(self, v: int) -> int:
        return len(self.out[v])

    def in_degrees(self) -> list[int]:
        deg = [0] * self.n
        for _, v in self.arcs():
            deg[v] += 1
        return deg


class EdgeSet(frozenset):
    """A set of undirected edges stored as ``(u, v)`` with ``u < v``."""

    def __new__(cls, pairs=()):
        return super().__new__(cls, (tuple(sorted(p)) for p in pairs))

    def sorted(self) -> list[tuple[int, int]]:
        return sorted(self)

    def is_perfect_matching(self, g: Graph) -> bool:
        covered = [0] * g.n
        for u, v in self:
            if not g.has_edge(u, v):
                return False
            covered[u] += 1
            covered[v] += 1
        return all(c == 1 for c in covered)


def _check_pair(n, u, v):
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"endpoint out of range in pair {(u, v)} for n={n}")
    if u == v:
        raise GraphError(f"loop at vertex {u} in pair {(u, v)}")


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph; duplicate edges are merged."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    nbrs = [set() for _ in range(n)]
    for u, v in edges:
        _check_pair(n, u, v)
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, (sorted(a) for a in nbrs))


def digraph_from_arcs(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    out = [set() for _ in range(n)]
    for u, v in arcs:
        _check_pair(n, u, v)
        out[u].add(v)
    return Digraph(n, (sorted(a) for a in out))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = bytearray(g.n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for u in g.adj[v]:
            if not seen[u]:
                seen[u] = 1
                count += 1
                stack.append(u)
    return count == g.n


def is_regular(g: Graph, d: int) -> bool:
    return all(len(a) == d for a in g.adj)


def underlying_graph(d: Digraph) -> Graph:
    return graph_from_edges(d.n, d.arcs())


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle (None for forests), by BFS from every vertex."""
    best = None
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if best is not None and 2 * dist[v] + 1 >= best:
                break
            for u in g.adj[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    cycle = dist[u] + dist[v] + 1
                    if best is None or cycle < best:
                        best = cycle
    return best


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return False
    return True
