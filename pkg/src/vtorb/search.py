"""Automorphism groups and isomorphisms by individualisation-refinement.

The search tree is the usual one: refine to an equitable partition, pick the
first smallest non-singleton cell, individualise each of its vertices in
turn. Only the leftmost ("first") path is fully explored. At each first-path
node, every sibling not already in the orbit of the first child (under the
generators found so far that fix the path prefix) gets a depth-first search
for a leaf equivalent to the first leaf. Nodes whose refinement trace
differs from the first path's at that depth are cut.

The first path supplies a base and the generators found at depth ``k`` fix
its first ``k`` points, so they form a strong generating set and no
Schreier-Sims pass is needed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import kernels
from .graph import Digraph, Graph
from .group import PermGroup, orbits
from .perm import Perm


@dataclass
class _Node:
    lab: list
    starts: list
    trace: tuple
    cell: int = -1  # start of the target cell, -1 at a leaf
    cell_end: int = -1


@dataclass
class SearchStats:
    nodes: int = 0
    leaves: int = 0
    generators: int = 0
    depth: int = 0
    extra: dict = field(default_factory=dict)


def _adjacency(g):
    return g.out if isinstance(g, Digraph) else g.adj


def _refiner_adjacency(g):
    """Digraphs list each in-neighbour ``M`` times (``M`` > max out-degree),
    so one neighbour count separates vertices by in- and out-arcs alike."""
    if not isinstance(g, Digraph):
        return g.adj
    weight = max((len(a) for a in g.out), default=0) + 1
    rows = [list(a) for a in g.out]
    for v, outs in enumerate(g.out):
        for u in outs:
            rows[u].extend([v] * weight)
    return rows


def _target(node: _Node, n: int):
    """First smallest non-singleton cell, or None if the partition is discrete."""
    bounds = node.starts + [n]
    best = None
    for c in range(len(node.starts)):
        size = bounds[c + 1] - bounds[c]
        if size > 1 and (best is None or size < best[1] - best[0]):
            best = (bounds[c], bounds[c + 1])
    return best


class _Tree:
    def __init__(self, g, colours=None):
        self.g = g
        self.n = g.n
        self.refiner = kernels.Refiner(_refiner_adjacency(g))
        self.stats = SearchStats()
        if colours is None:
            lab, starts = list(range(self.n)), [0] if self.n else []
        else:
            order = sorted(range(self.n), key=lambda v: (colours[v], v))
            lab = order
            starts = [i for i in range(self.n) if i == 0 or colours[order[i]] != colours[order[i - 1]]]
        lab, starts, trace = self.refiner.refine(lab, starts, list(starts))
        self.root = self._finish(lab, starts, trace)

    def _finish(self, lab, starts, trace) -> _Node:
        node = _Node(list(lab), list(starts), tuple(trace))
        t = _target(node, self.n)
        if t is not None:
            node.cell, node.cell_end = t
        self.stats.nodes += 1
        return node

    def child(self, node: _Node, v: int) -> _Node:
        lab = list(node.lab)
        c = node.cell
        p = lab.index(v, c, node.cell_end)
        lab[c], lab[p] = lab[p], lab[c]
        starts = sorted(node.starts + [c + 1])
        lab, starts, trace = self.refiner.refine(lab, starts, [c])
        return self._finish(lab, starts, trace)


def _is_iso(g, h, images) -> bool:
    adj_h = _adjacency(h)
    sets = [set(a) for a in adj_h]
    for u, nbrs in enumerate(_adjacency(g)):
        iu = images[u]
        if len(adj_h[iu]) != len(nbrs):
            return False
        s = sets[iu]
        for v in nbrs:
            if images[v] not in s:
                return False
    return True


def _leaf_map(first_leaf: _Node, leaf: _Node, n: int) -> tuple:
    images = [0] * n
    for a, b in zip(first_leaf.lab, leaf.lab):
        images[a] = b
    return tuple(images)


def _hunt(src: _Tree, dst: _Tree, node: _Node, depth: int, path_traces, first_leaf):
    """DFS below ``node`` (in ``dst``'s tree) for a leaf that maps ``src``'s first leaf isomorphically."""
    if node.trace != path_traces[depth]:
        return None
    if node.cell < 0:
        dst.stats.leaves += 1
        images = _leaf_map(first_leaf, node, src.n)
        return images if _is_iso(src.g, dst.g, images) else None
    for v in node.lab[node.cell:node.cell_end]:
        found = _hunt(src, dst, dst.child(node, v), depth + 1, path_traces, first_leaf)
        if found is not None:
            return found
    return None


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def add_perm(self, images):
        for x, y in enumerate(images):
            rx, ry = self.find(x), self.find(y)
            if rx != ry:
                self.parent[max(rx, ry)] = min(rx, ry)


def _first_path(tree: _Tree):
    path = [tree.root]
    while path[-1].cell >= 0:
        node = path[-1]
        path.append(tree.child(node, node.lab[node.cell]))
    return path


def automorphism_search(g, colours=None) -> tuple[PermGroup, SearchStats]:
    """Automorphism group of a graph or digraph, with search statistics.

    ``colours`` optionally restricts to colour-preserving automorphisms.
    """
    n = g.n
    if n == 0:
        return PermGroup(0, ()), SearchStats()
    tree = _Tree(g, colours)
    path = _first_path(tree)
    traces = [node.trace for node in path]
    first_leaf = path[-1]
    depth = len(path) - 1
    base = [path[k].lab[path[k].cell] for k in range(depth)]
    levels: list[list[tuple]] = [[] for _ in range(depth)]
    for k in range(depth - 1, -1, -1):
        node = path[k]
        uf = _UnionFind(n)
        for lv in levels[k:]:
            for gen in lv:
                uf.add_perm(gen)
        v0 = base[k]
        failed: list[int] = []
        for w in node.lab[node.cell:node.cell_end]:
            rw = uf.find(w)
            if rw == uf.find(v0) or any(uf.find(f) == rw for f in failed):
                continue
            found = _hunt(tree, tree, tree.child(node, w), k + 1, traces, first_leaf)
            if found is None:
                failed.append(w)
            else:
                levels[k].append(found)
                uf.add_perm(found)
    tree.stats.generators = sum(len(lv) for lv in levels)
    tree.stats.depth = depth
    return PermGroup.from_bsgs(n, base, levels), tree.stats


def automorphism_group(g) -> PermGroup:
    """Full automorphism group of ``g`` (a :class:`Graph` or :class:`Digraph`)."""
    return automorphism_search(g)[0]


def find_isomorphism(g, h, colours_g=None, colours_h=None) -> Perm | None:
    """An isomorphism ``g -> h`` as a vertex map, or None."""
    if type(g) is not type(h) or g.n != h.n:
        return None
    if sorted(len(a) for a in _adjacency(g)) != sorted(len(a) for a in _adjacency(h)):
        return None
    if g.n == 0:
        return Perm(())
    src = _Tree(g, colours_g)
    dst = _Tree(h, colours_h)
    if colours_g is not None or colours_h is not None:
        cg = sorted(colours_g or [0] * g.n)
        ch = sorted(colours_h or [0] * h.n)
        if cg != ch:
            return None
    path = _first_path(src)
    traces = [node.trace for node in path]
    found = _hunt(src, dst, dst.root, 0, traces, path[-1])
    if found is None:
        return None
    if colours_g is not None and any(colours_g[v] != colours_h[found[v]] for v in range(g.n)):
        return None
    return Perm(found)


def is_isomorphic(g, h) -> bool:
    return find_isomorphism(g, h) is not None


def brute_force_automorphisms(g, limit: int = 10) -> list[Perm]:
    """Every automorphism, by testing all ``n!`` permutations (test oracle)."""
    if g.n > limit:
        raise ValueError(f"brute force refused for n={g.n} > {limit}")
    return [Perm(p) for p in itertools.permutations(range(g.n)) if _is_iso(g, g, p)]


def is_automorphism(g, p: Perm) -> bool:
    return p.degree == g.n and _is_iso(g, g, p.images)


def is_vertex_transitive(g: Graph, G: PermGroup | None = None) -> bool:
    if G is None:
        G = automorphism_group(g)
    return len(orbits(G).blocks) <= 1


def arc_orbits(g: Graph, G: PermGroup | None = None) -> list[list[tuple[int, int]]]:
    """Orbits of ``G`` (default ``Aut(g)``) on arcs, ordered by least arc."""
    if G is None:
        G = automorphism_group(g)
    arcs = g.arcs()
    index = {a: i for i, a in enumerate(arcs)}
    uf = _UnionFind(len(arcs))
    for gen in G.gens:
        im = gen.images
        uf.add_perm([index[(im[u], im[v])] for u, v in arcs])
    groups: dict[int, list] = {}
    for i, a in enumerate(arcs):
        groups.setdefault(uf.find(i), []).append(a)
    return [groups[r] for r in sorted(groups)]


def edge_orbits(g: Graph, G: PermGroup | None = None) -> list[list[tuple[int, int]]]:
    if G is None:
        G = automorphism_group(g)
    edges = g.edges()
    index = {e: i for i, e in enumerate(edges)}
    uf = _UnionFind(len(edges))
    for gen in G.gens:
        im = gen.images
        uf.add_perm([index[tuple(sorted((im[u], im[v])))] for u, v in edges])
    groups: dict[int, list] = {}
    for i, e in enumerate(edges):
        groups.setdefault(uf.find(i), []).append(e)
    return [groups[r] for r in sorted(groups)]


def is_arc_transitive(g: Graph, G: PermGroup | None = None) -> bool:
    return len(arc_orbits(g, G)) <= 1


def edge_orbit_count(g: Graph, G: PermGroup | None = None) -> int:
    return len(edge_orbits(g, G))
