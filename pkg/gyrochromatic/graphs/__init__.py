"""
Graphs app: representation, generators, products and homomorphisms
"""

from gyrochromatic.graphs.models import AbelianGroup, ConnectionSet, Graph, GroupElement
from gyrochromatic.graphs.generators import (
    make_graph, complete, cycle, circular_clique, kneser, petersen,
    cayley, circulant, hamming_cayley, g5, g5_connection_set,
)
from gyrochromatic.graphs.operations import (
    cartesian, lexicographic, disjoint_union, identify, complement, line_graph,
    induced_subgraph, components,
)
from gyrochromatic.graphs.homomorphism import find_homomorphism, is_homomorphism, search_order
from gyrochromatic.graphs.parsing import read_edge_list, write_edge_list, parse_dsl, resolve_graph

__all__ = [
    "AbelianGroup", "ConnectionSet", "Graph", "GroupElement",
    "make_graph", "complete", "cycle", "circular_clique", "kneser", "petersen",
    "cayley", "circulant", "hamming_cayley", "g5", "g5_connection_set",
    "cartesian", "lexicographic", "disjoint_union", "identify", "complement", "line_graph",
    "induced_subgraph", "components",
    "find_homomorphism", "is_homomorphism", "search_order",
    "read_edge_list", "write_edge_list", "parse_dsl", "resolve_graph",
]
