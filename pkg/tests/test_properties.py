"""Property-based checks against naive reference computations."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

import networkx as nx
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from conftest import from_nx, to_nx
from vtorb import formats
from vtorb.group import PermGroup, meo
from vtorb.perm import Perm, cyclic_data, min_gcd_identity_check
from vtorb.search import automorphism_group, is_automorphism

SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])

perms = st.integers(0, 14).flatmap(lambda n: st.permutations(list(range(n)))).map(Perm)


def _naive_orbit(p: Perm, v: int) -> int:
    k, w = 1, p[v]
    while w != v:
        k, w = k + 1, p[w]
    return k


@SETTINGS
@given(perms)
def test_cyclic_data_matches_naive(p):
    cd = cyclic_data(p)
    sizes = [_naive_orbit(p, v) for v in range(p.degree)]
    assert sum(cd.orbit_lengths) == p.degree
    assert cd.orbit_count == sum(Fraction(1, s) for s in sizes)
    order = 1
    for s in sizes:
        order = lcm(order, s)
    assert cd.order == order and (p ** order).is_identity()
    assert cd.regular_vertices == sizes.count(order)
    if p.degree:
        assert cd.longest <= cd.order <= cd.shortest * (cd.order // cd.shortest)
        assert all(cd.order % s == 0 for s in cd.orbit_lengths)


@SETTINGS
@given(perms)
def test_mingcd_identity(p):
    assert min_gcd_identity_check(p)
    cd = cyclic_data(p)
    if cd.orbit_lengths:
        stab = [cd.order // s for s in cd.orbit_lengths]
        g = 0
        for x in stab:
            g = gcd(g, x)
        assert Fraction(cd.order, cd.longest) == Fraction(min(stab), g)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(chosen)
    return from_nx(g)


@SETTINGS
@given(graphs(max_n=70))
def test_graph6_sparse6_roundtrip(g):
    assert formats.decode_graph6(formats.encode_graph6(g)) == g
    assert formats.decode_sparse6(formats.encode_sparse6(g)) == g
    assert nx.to_graph6_bytes(to_nx(g), header=False).strip() == formats.encode_graph6(g)


@SETTINGS
@given(graphs(max_n=10), st.randoms(use_true_random=False))
def test_aut_order_invariant_under_relabelling(g, rnd):
    images = list(range(g.n))
    rnd.shuffle(images)
    h = g.relabel(images)
    G, H = automorphism_group(g), automorphism_group(h)
    assert G.order == H.order
    assert meo(G)[0] == meo(H)[0]
    assert all(is_automorphism(g, gen) for gen in G.gens)
    sigma = Perm(images)
    # conjugating by the relabelling carries Aut(g) onto Aut(h)
    assert all(H.contains(~sigma * gen * sigma) or H.contains(sigma * gen * ~sigma) for gen in G.gens)


@SETTINGS
@given(st.integers(1, 7).flatmap(lambda n: st.lists(st.permutations(list(range(n))), min_size=1, max_size=3)))
def test_group_order_matches_closure(gens):
    n = len(gens[0])
    G = PermGroup(n, [Perm(g) for g in gens])
    seen = {tuple(range(n))}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[i] for i in x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    assert G.order == len(seen)
    elems = {p.images for p in G.elements()}
    assert elems == seen
    for v in range(n):
        assert G.stabiliser(v).order * len(G.orbit(v)) == G.order


@SETTINGS
@given(st.integers(1, 7).flatmap(lambda n: st.lists(st.permutations(list(range(n))), min_size=1, max_size=3)))
def test_records_match_cyclic_data(gens):
    n = len(gens[0])
    G = PermGroup(n, [Perm(g) for g in gens])
    it, exact = G.records(with_elements=True)
    assert exact
    count = 0
    for rec in it:
        cd = cyclic_data(Perm(rec[-1]))
        assert rec[:5] == (cd.order, cd.longest, cd.shortest, cd.orbit_count, cd.regular_vertices)
        count += 1
    assert count == G.order
