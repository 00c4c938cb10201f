"""Quotients by a group, matching contractions and the local actions they expose."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import EdgeSet, Graph, GraphError, graph_from_edges, is_regular
from .group import PermGroup, meo, orbits
from .search import arc_orbits, automorphism_group, edge_orbits, is_arc_transitive, is_automorphism


@dataclass(frozen=True)
class QuotientResult:
    quotient: Graph
    block_map: tuple[int, ...]
    block_sizes: tuple[int, ...]


@dataclass(frozen=True)
class MergeResult:
    merged: Graph
    edge_map: dict  # matching edge (u, v), u < v -> merged vertex
    simple: bool

    def to_json(self) -> dict:
        return {
            "simple": self.simple,
            "edge_map": [[u, v, i] for (u, v), i in sorted(self.edge_map.items())],
        }


def quotient(g: Graph, G: PermGroup) -> QuotientResult:
    """Graph on the G-orbits; two orbits are adjacent if some members are. Loops dropped."""
    for i, gen in enumerate(G.gens):
        if not is_automorphism(g, gen):
            raise GraphError(f"generator {i} {gen.cycle_string()} is not an automorphism")
    part = orbits(G)
    b = part.block_of
    edges = {(min(b[u], b[v]), max(b[u], b[v])) for u, v in g.edges() if b[u] != b[v]}
    return QuotientResult(graph_from_edges(len(part.blocks), edges), b, tuple(part.sizes()))


def induced_action(G: PermGroup, points) -> PermGroup:
    """Action of the setwise stabiliser generators of ``G`` on ``points``, relabelled 0..k-1.

    Every generator of ``G`` must leave ``points`` invariant.
    """
    points = list(points)
    where = {p: i for i, p in enumerate(points)}
    gens = []
    for gen in G.gens:
        try:
            gens.append([where[gen.images[p]] for p in points])
        except KeyError:
            raise ValueError("generator does not preserve the point set") from None
    return PermGroup(len(points), gens)


def local_action(g: Graph, G: PermGroup, v: int) -> PermGroup:
    """G_v acting on the neighbourhood of v (points in adjacency order)."""
    return induced_action(G.stabiliser(v), g.adj[v])


def invariant_matching(g: Graph, G: PermGroup | None = None) -> EdgeSet | None:
    """The G-invariant perfect matching of a cubic VT graph with two arc orbits, else None."""
    if not is_regular(g, 3):
        return None
    if G is None:
        G = automorphism_group(g)
    if len(orbits(G).blocks) != 1 or len(arc_orbits(g, G)) != 2:
        return None
    for orb in edge_orbits(g, G):
        t = EdgeSet(orb)
        if t.is_perfect_matching(g):
            return t
    return None


def merge(g: Graph, T) -> MergeResult:
    """Contract every edge of the perfect matching ``T``.

    Merged vertex i is the i-th edge of ``T`` in sorted order. When two
    matching edges are joined by more than one edge of ``g`` the result is
    collapsed to a simple graph and flagged ``simple=False``.
    """
    T = EdgeSet(T)
    if not T.is_perfect_matching(g):
        raise GraphError("edge set is not a perfect matching of the graph")
    order = T.sorted()
    edge_map = {e: i for i, e in enumerate(order)}
    owner = [0] * g.n
    for (u, v), i in edge_map.items():
        owner[u] = owner[v] = i
    seen = {}
    for u, v in g.edges():
        a, b = owner[u], owner[v]
        if a == b:
            continue
        key = (min(a, b), max(a, b))
        seen[key] = seen.get(key, 0) + 1
    simple = all(c == 1 for c in seen.values())
    return MergeResult(graph_from_edges(len(order), seen), edge_map, simple)


def merge_cubic(g: Graph, T) -> MergeResult:
    if not is_regular(g, 3):
        raise GraphError("merge_cubic expects a cubic graph")
    return merge(g, T)


def induced_on_matching(G: PermGroup, res: MergeResult) -> PermGroup:
    """Action of ``G`` on the merged vertices (G must preserve the matching)."""
    gens = []
    for gen in G.gens:
        im = gen.images
        gens.append([res.edge_map[tuple(sorted((im[u], im[v])))] for u, v in sorted(res.edge_map)])
    return PermGroup(res.merged.n, gens)


def classify_degree4(H: PermGroup) -> str:
    """Name a transitive group of degree 4 up to permutation isomorphism."""
    order = H.order
    if order == 8:
        return "D4"
    if order == 4:
        return "C4" if meo(H)[0] == 4 else "C2^2"
    return {24: "S4", 12: "A4"}.get(order, f"order {order}")


@dataclass(frozen=True)
class QuarticMerge:
    result: MergeResult
    lam: Graph
    valence: int | None
    arc_transitive: bool
    red_partner: tuple[int, ...]


def red_partner(g: Graph, G: PermGroup) -> tuple[int, ...] | None:
    """For each v, the unique neighbour fixed by G_v when the local action is Sym(3) on 3 of 4 points."""
    if not is_regular(g, 4):
        return None
    if len(orbits(G).blocks) != 1:
        return None
    loc = local_action(g, G, 0)
    sizes = sorted(len(b) for b in orbits(loc).blocks)
    if sizes != [1, 3] or loc.order != 6:
        return None
    # vertex transitivity carries the pattern at 0 to every vertex
    partner = [0] * g.n
    for v in range(g.n):
        stab = G.stabiliser(v)
        fixed = [u for u in g.adj[v] if all(gen.images[u] == u for gen in stab.gens)]
        if len(fixed) != 1:
            return None
        partner[v] = fixed[0]
    if any(partner[partner[v]] != v for v in range(g.n)):
        return None
    return tuple(partner)


def merge_quartic(g: Graph, G: PermGroup | None = None) -> QuarticMerge | None:
    """Contract the red matching {v v'} of a quartic VT graph with Sym(3) local action.

    Returns None when the local pattern is absent (including arc-transitive input).
    """
    if not is_regular(g, 4):
        return None
    if G is None:
        G = automorphism_group(g)
    partner = red_partner(g, G)
    if partner is None:
        return None
    T = EdgeSet((v, partner[v]) for v in range(g.n))
    res = merge(g, T)
    induced = induced_on_matching(G, res)
    lam = res.merged
    return QuarticMerge(res, lam, lam.valence(), is_arc_transitive(lam, induced), partner)
