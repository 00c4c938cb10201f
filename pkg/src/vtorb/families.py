"""Generators for the graph families used throughout, with fixed vertex numbering.

Numbering conventions:

* ``circulant(n, S)``: vertex i, edges i ~ i+s (mod n) for s in S.
* ``gp(n, k)``: x_i = i, y_i = n + i.
* ``prism(n)``: outer cycle 0..n-1, inner cycle n..2n-1, rungs i ~ n+i.
* ``moebius_ladder(n)``: C_{2n} on 0..2n-1 plus chords i ~ i+n.
* ``lex_cycle_2k1(n)``: (i, e) = 2i + e.
* ``px_digraph(r, 1)``: (x, i) = 2x + i.
* ``px_digraph(r, s)``, s >= 2: the s-path starting at x with layer bits
  i_0..i_s is x * 2^(s+1) + (i_0 i_1 ... i_s read as binary, i_0 high).
* ``spx(r, s)``: u_- = 2u, u_+ = 2u + 1 for each PX vertex u.
* ``psi(r)``: (i, j) = 3i + j.
* ``named("pappus")`` / ``named("heawood")``: rings of consecutive labels on
  which the shift automorphism acts as +1 (see :data:`SHIFT_RINGS`).
"""

from __future__ import annotations

from itertools import combinations
from math import gcd

from .graph import Digraph, Graph, GraphError, digraph_from_arcs, graph_from_edges
from .perm import Perm


def complete(n: int) -> Graph:
    return graph_from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return graph_from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def circulant(n: int, steps) -> Graph:
    steps = sorted(set(steps))
    if n < 3:
        raise GraphError(f"circulant needs n >= 3, got {n}")
    for s in steps:
        if not 1 <= s <= n // 2:
            raise GraphError(f"circulant step {s} outside 1..{n // 2}")
    return graph_from_edges(n, [(i, (i + s) % n) for i in range(n) for s in steps])


def gp(n: int, k: int) -> Graph:
    """Generalised Petersen graph GP(n, k)."""
    if n < 3 or not 1 <= k or 2 * k >= n:
        raise GraphError(f"GP(n,k) needs n >= 3 and 1 <= k < n/2, got n={n}, k={k}")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return graph_from_edges(2 * n, edges)


def prism(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"prism needs n >= 3, got {n}")
    edges = []
    for i in range(n):
        edges += [(i, (i + 1) % n), (n + i, n + (i + 1) % n), (i, n + i)]
    return graph_from_edges(2 * n, edges)


def moebius_ladder(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"Moebius ladder needs n >= 3, got {n}")
    m = 2 * n
    return graph_from_edges(m, [(i, (i + 1) % m) for i in range(m)] + [(i, i + n) for i in range(n)])


def lcf(n: int, jumps, repeats: int = 1) -> Graph:
    """Hamiltonian cycle 0..n-1 plus chords given in LCF notation."""
    seq = list(jumps) * repeats
    if len(seq) != n:
        raise GraphError(f"LCF sequence of length {len(seq)} for n={n}")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)] + [(i, (i + seq[i]) % n) for i in range(n)])


def kneser(n: int, k: int) -> Graph:
    subsets = list(combinations(range(n), k))
    edges = [(a, b) for a, b in combinations(range(len(subsets)), 2) if not set(subsets[a]) & set(subsets[b])]
    return graph_from_edges(len(subsets), edges)


def hypercube(d: int) -> Graph:
    n = 1 << d
    return graph_from_edges(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d)])


_PAPPUS = [
    (0, 9), (0, 10), (0, 15), (1, 10), (1, 11), (1, 16), (2, 6), (2, 11), (2, 15),
    (3, 6), (3, 7), (3, 16), (4, 7), (4, 8), (4, 15), (5, 8), (5, 9), (5, 16),
    (6, 12), (7, 13), (8, 14), (9, 12), (10, 13), (11, 14), (12, 17), (13, 17), (14, 17),
]
_HEAWOOD = [
    (0, 4), (0, 5), (0, 9), (1, 5), (1, 6), (1, 8), (2, 6), (2, 7), (2, 9), (3, 4), (3, 7),
    (3, 8), (4, 11), (5, 10), (6, 11), (7, 10), (8, 13), (9, 13), (10, 12), (11, 12), (12, 13),
]

# (first label, ring length) for each ring of the shift automorphism
SHIFT_RINGS = {
    "pappus": ((0, 6), (6, 6), (12, 3), (15, 2), (17, 1)),
    "heawood": ((0, 4), (4, 4), (8, 2), (10, 2), (12, 1), (13, 1)),
}

NAMED = ("k4", "k33", "q3", "petersen", "pappus", "heawood", "dodecahedron")


def named(name: str) -> Graph:
    key = name.lower().replace("_", "").replace("-", "").replace(",", "")
    if key == "k4":
        return complete(4)
    if key in ("k33", "k3,3"):
        return complete_bipartite(3, 3)
    if key in ("q3", "cube"):
        return hypercube(3)
    if key == "petersen":
        return kneser(5, 2)
    if key == "pappus":
        return graph_from_edges(18, _PAPPUS)
    if key == "heawood":
        return graph_from_edges(14, _HEAWOOD)
    if key == "dodecahedron":
        return lcf(20, [10, 7, 4, -4, -7, 10, -4, 7, -7, 4], 2)
    raise GraphError(f"unknown named graph {name!r}; expected one of {', '.join(NAMED)}")


def shift_automorphism(name: str) -> Perm:
    """The ring shift i -> i+1 of the Pappus or Heawood numbering."""
    rings = SHIFT_RINGS[name.lower()]
    images = []
    for start, size in rings:
        images += [start + (t + 1) % size for t in range(size)]
    return Perm(images)


def lex_cycle_2k1(n: int) -> Graph:
    """C_n[2K_1]: (i, e) ~ (i +- 1, e') for all e, e'."""
    if n < 3:
        raise GraphError(f"C_n[2K1] needs n >= 3, got {n}")
    edges = [(2 * i + a, 2 * ((i + 1) % n) + b) for i in range(n) for a in (0, 1) for b in (0, 1)]
    return graph_from_edges(2 * n, edges)


def _check_px(r: int, s: int):
    if r < 3 or not 1 <= s <= r - 1:
        raise GraphError(f"PX(r,s) needs r >= 3 and 1 <= s <= r-1, got r={r}, s={s}")


def px_digraph(r: int, s: int) -> Digraph:
    """Praeger-Xu digraph: s-paths of the base digraph on Z_r x Z_2."""
    _check_px(r, s)
    if s == 1:
        arcs = [(2 * x + i, 2 * ((x + 1) % r) + j) for x in range(r) for i in (0, 1) for j in (0, 1)]
        return digraph_from_arcs(2 * r, arcs)
    width = s + 1
    mask = (1 << width) - 1
    arcs = []
    for x in range(r):
        for bits in range(1 << width):
            u = x * (1 << width) + bits
            for b in (0, 1):
                nxt = ((bits << 1) | b) & mask
                arcs.append((u, ((x + 1) % r) * (1 << width) + nxt))
    return digraph_from_arcs(r << width, arcs)


def px_vertex(r: int, s: int, x: int, bits) -> int:
    """Index of the PX vertex with start ``x`` and layer bits ``bits`` (length s+1, or 1 for s=1)."""
    if s == 1:
        (i,) = bits
        return 2 * x + i
    value = 0
    for b in bits:
        value = (value << 1) | b
    return x * (1 << (s + 1)) + value


def split(d: Digraph) -> Graph:
    """u -> u_- = 2u, u_+ = 2u+1; edges u_-u_+ and v_+u_- for each arc (v, u)."""
    edges = [(2 * u, 2 * u + 1) for u in range(d.n)]
    edges += [(2 * v + 1, 2 * u) for v, u in d.arcs()]
    return graph_from_edges(2 * d.n, edges)


def spx(r: int, s: int) -> Graph:
    return split(px_digraph(r, s))


def psi(r: int) -> Graph:
    """Psi(r) on Z_r x Z_3: (i,j)~(i-1,j), (i+1,j+1), (i+1,j+2) for even i."""
    if r < 4 or r % 2:
        raise GraphError(f"Psi(r) needs even r >= 4, got {r}")
    edges = []
    for i in range(0, r, 2):
        for j in range(3):
            v = 3 * i + j
            edges.append((v, 3 * ((i - 1) % r) + j))
            edges.append((v, 3 * ((i + 1) % r) + (j + 1) % 3))
            edges.append((v, 3 * ((i + 1) % r) + (j + 2) % 3))
    return graph_from_edges(3 * r, edges)


def psi_swap(r: int) -> Perm:
    """(i,0) <-> (i,1), (i,2) fixed."""
    images = []
    for i in range(r):
        images += [3 * i + 1, 3 * i, 3 * i + 2]
    return Perm(images)


def spx_flip(r: int) -> Perm:
    """On SPX(r,1): swap the two split copies of (0,0) and (0,1), fix the rest.

    Both PX vertices (0,0), (0,1) have the same in- and out-neighbours, so
    exchanging u_- and u_+ pairs between them is an automorphism of order 2
    with two 2-orbits.
    """
    images = list(range(4 * r))
    a, b = px_vertex(r, 1, 0, (0,)), px_vertex(r, 1, 0, (1,))
    for e in (0, 1):
        images[2 * a + e], images[2 * b + e] = 2 * b + e, 2 * a + e
    return Perm(images)


def cartesian_k2(g: Graph) -> Graph:
    """g box K2: (v, e) = 2v + e."""
    edges = [(2 * v, 2 * v + 1) for v in range(g.n)]
    edges += [(2 * u + e, 2 * v + e) for u, v in g.edges() for e in (0, 1)]
    return graph_from_edges(2 * g.n, edges)


def clique_truncation(g: Graph) -> Graph:
    """Replace each vertex by a clique on its incident arcs; arcs (u,v), (v,u) adjacent.

    Vertices are the arcs of ``g`` in :meth:`Graph.arcs` order.
    """
    arcs = g.arcs()
    index = {a: i for i, a in enumerate(arcs)}
    edges = [(index[(u, v)], index[(v, u)]) for u, v in g.edges()]
    for u in range(g.n):
        for a, b in combinations(g.adj[u], 2):
            edges.append((index[(u, a)], index[(u, b)]))
    return graph_from_edges(len(arcs), edges)


FAMILIES = ("k4", "k33", "q3", "petersen", "pappus", "heawood", "dodecahedron", "gp", "prism",
            "moebius", "circulant", "lex2k1", "px", "spx", "psi")


def build(family: str, **params) -> Graph | Digraph:
    """Dispatch by CLI family name."""
    f = family.lower()
    need = {"gp": ("n", "k"), "prism": ("n",), "moebius": ("n",), "circulant": ("n", "steps"),
            "lex2k1": ("n",), "px": ("r", "s"), "spx": ("r", "s"), "psi": ("r",)}
    if f in NAMED:
        return named(f)
    if f not in need:
        raise GraphError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    missing = [p for p in need[f] if params.get(p) is None]
    if missing:
        raise GraphError(f"family {f} needs --{' --'.join(missing)}")
    if f == "gp":
        return gp(params["n"], params["k"])
    if f == "prism":
        return prism(params["n"])
    if f == "moebius":
        return moebius_ladder(params["n"])
    if f == "circulant":
        return circulant(params["n"], params["steps"])
    if f == "lex2k1":
        return lex_cycle_2k1(params["n"])
    if f == "px":
        return px_digraph(params["r"], params["s"])
    if f == "spx":
        return spx(params["r"], params["s"])
    return psi(params["r"])


def cubic_circulants(max_n: int):
    """Parameters ``(n, (a, n/2))`` of the connected cubic circulants on at most ``max_n`` vertices."""
    out = []
    for n in range(4, max_n + 1, 2):
        for a in range(1, n // 2):
            if gcd(a, n // 2) == 1:
                out.append((n, (a, n // 2)))
    return out

