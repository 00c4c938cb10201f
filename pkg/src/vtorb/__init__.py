"""Element orders, orbit statistics and regular orbits of automorphisms of vertex-transitive graphs."""

from __future__ import annotations

from .graph import Digraph, EdgeSet, Graph, GraphError, graph_from_edges, digraph_from_arcs
from .group import PermGroup, ell_group, exponent, meo, meo_local, mu_group, orbits
from .kernels import BACKEND
from .perm import Perm, cyclic_data, parse_perm
from .search import automorphism_group, find_isomorphism, is_isomorphic, is_vertex_transitive

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Digraph", "EdgeSet", "Graph", "GraphError", "Perm", "PermGroup",
    "automorphism_group", "cyclic_data", "digraph_from_arcs", "ell_group", "exponent",
    "find_isomorphism", "graph_from_edges", "is_isomorphic", "is_vertex_transitive",
    "meo", "meo_local", "mu_group", "orbits", "parse_perm",
]
