from __future__ import annotations

import warnings

import networkx as nx
import pytest

from conftest import from_nx, random_graph, to_nx
from vtorb.families import named
from vtorb.formats import (FormatError, MultigraphWarning, decode_any, decode_graph6, decode_sparse6, encode_graph6,
                           encode_many, encode_sparse6, format_arc_list, format_edge_list, iter_graph_lines,
                           parse_arc_list, parse_edge_list)
from vtorb.graph import digraph_from_arcs


def _nx_g6(g):
    return nx.to_graph6_bytes(to_nx(g), header=False).strip()


def _nx_s6(g):
    return nx.to_sparse6_bytes(to_nx(g), header=False).strip()


def test_graph6_matches_networkx(rng):
    for n in list(range(0, 20)) + [62, 63, 64, 100]:
        g = random_graph(rng, n, 0.3)
        assert encode_graph6(g) == _nx_g6(g)
        assert decode_graph6(_nx_g6(g)) == g


def test_large_graph6_header(rng):
    g = random_graph(rng, 300, 0.01)
    data = encode_graph6(g)
    assert data[:1] == b"~" and data == _nx_g6(g)
    assert decode_graph6(data) == g


def test_sparse6_decodes_networkx_output(rng):
    for n in range(1, 40):
        g = random_graph(rng, n, 0.2)
        assert decode_sparse6(_nx_s6(g)) == g


def test_sparse6_bytes_match_networkx(rng):
    # at n in {2, 4, 8, 16} networkx pads differently from nauty
    for n in [3, 5, 6, 7, 9, 12, 15, 17, 20, 33, 63, 64, 65, 200]:
        g = random_graph(rng, n, 0.15)
        assert encode_sparse6(g) == _nx_s6(g), n
        assert decode_sparse6(encode_sparse6(g)) == g


def test_sparse6_padding_special_case():
    # nauty: when n <= 2^(k-1) pad with a 0 bit and k ones would decode to an extra edge
    for n in (2, 4, 8, 16):
        g = from_nx(nx.path_graph(n))
        assert decode_sparse6(encode_sparse6(g)) == g


def test_decode_any_and_headers():
    p = named("petersen")
    assert decode_any(encode_graph6(p)) == p
    assert decode_any(encode_sparse6(p)) == p
    assert decode_any(b">>sparse6<<" + encode_sparse6(p)) == p
    assert list(iter_graph_lines(encode_many([p, p]))) == [p, p]


def test_graph6_errors_have_offsets():
    with pytest.raises(FormatError) as exc:
        decode_graph6(b"D")
    assert exc.value.offset == 1
    with pytest.raises(FormatError):
        decode_graph6(encode_graph6(named("k4")) + b"?")
    with pytest.raises(FormatError):
        decode_sparse6(b"Dxx")


def test_sparse6_multigraph_warning():
    # loop at 0 and a doubled edge 0-1 on 2 vertices: ":Ab" style built by networkx
    m = nx.MultiGraph()
    m.add_nodes_from(range(3))
    m.add_edges_from([(0, 1), (0, 1), (1, 2)])
    data = nx.to_sparse6_bytes(m, header=False).strip()
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        g = decode_sparse6(data)
    assert g.edges() == [(0, 1), (1, 2)]
    assert any(issubclass(w.category, MultigraphWarning) for w in caught)


def test_edge_lists_round_trip():
    p = named("petersen")
    assert parse_edge_list(format_edge_list(p)) == p
    d = digraph_from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    assert parse_arc_list(format_arc_list(d)).out == d.out


@pytest.mark.parametrize("text", ["", "3 2\n0 1\n", "3 1\n0 x\n", "3 1\n0 1 2\n"])
def test_edge_list_errors(text):
    with pytest.raises(FormatError):
        parse_edge_list(text)
