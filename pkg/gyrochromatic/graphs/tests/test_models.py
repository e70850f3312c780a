"""
Model tests for the graphs app

Includes tests for:
- AbelianGroup: parsing, element indexing, arithmetic and automorphisms
- ConnectionSet: symmetry and identity checks
- Graph: invariants of the adjacency rows, equality and networkx export

Uses pytest fixtures for the small groups and graphs shared by the tests
"""

import pytest

from gyrochromatic.exceptions import ValidationError
from gyrochromatic.graphs import make_graph
from gyrochromatic.graphs.models import AbelianGroup, ConnectionSet, Graph, bits_to_list, list_to_bits


# ---------------- FIXTURES ----------------

@pytest.fixture
def z5x5():
    """ Z_5 x Z_5 """
    return AbelianGroup((5, 5))

@pytest.fixture
def triangle():
    """ K3 from an explicit edge list """
    return make_graph(3, [(0, 1), (1, 2), (2, 0)])


# ---------------- BITSET HELPERS ----------------

def test_bits_round_trip():
    """ list_to_bits and bits_to_list are inverse on sorted lists """
    assert list_to_bits([0, 3, 5]) == 0b101001
    assert bits_to_list(0b101001) == [0, 3, 5]


# ---------------- ABELIAN GROUPS ----------------

def test_group_parse_and_order(z5x5):
    """ '5x5' parses to the group of order 25 with rank 2 """
    assert AbelianGroup.parse("5x5") == z5x5
    assert z5x5.order == 25
    assert z5x5.rank == 2
    assert str(AbelianGroup.parse("12")) == "12"

@pytest.mark.parametrize("spec", ["abc", "5x", "1", "0x3"])
def test_group_parse_rejects_bad_specs(spec):
    """ Malformed or degenerate group specs are input errors """
    with pytest.raises(ValidationError):
        AbelianGroup.parse(spec)

def test_group_mixed_radix_order(z5x5):
    """ Elements are listed with the first coordinate most significant """
    assert z5x5.elements[0] == (0, 0)
    assert z5x5.elements[1] == (0, 1)
    assert z5x5.elements[5] == (1, 0)
    assert z5x5.index((3, 4)) == 19
    assert z5x5.element(19) == (3, 4)

def test_group_arithmetic(z5x5):
    """ add / sub / neg are componentwise modulo the moduli """
    assert z5x5.add((4, 3), (2, 2)) == (1, 0)
    assert z5x5.sub((0, 0), (1, 2)) == (4, 3)
    assert z5x5.neg((1, 0)) == (4, 0)
    i, j = z5x5.index((4, 3)), z5x5.index((2, 2))
    assert z5x5.add_table[i][j] == z5x5.index((1, 0))

def test_group_validate_rejects_unreduced(z5x5):
    """ Elements must have one reduced residue per factor """
    with pytest.raises(ValidationError):
        z5x5.validate((5, 0))
    with pytest.raises(ValidationError):
        z5x5.validate((1,))

def test_group_automorphisms_are_permutations():
    """ Every automorphism permutes the indices and fixes zero; the identity comes first """
    group = AbelianGroup((5, 5))
    autos = group.automorphisms
    assert autos[0] == tuple(range(25))
    # unit scalings 4 * 4 times the swap of the two equal factors
    assert len(autos) == 32
    for perm in autos:
        assert sorted(perm) == list(range(25))
        assert perm[0] == 0


# ---------------- CONNECTION SETS ----------------

def test_connection_set_requires_symmetry():
    """ S must equal -S """
    with pytest.raises(ValidationError):
        ConnectionSet.cyclic(4, [1])

def test_connection_set_rejects_identity():
    """ 0 must not lie in S """
    with pytest.raises(ValidationError):
        ConnectionSet.cyclic(5, [0, 1, 4])

def test_connection_set_mask():
    """ mask has one bit per element index """
    assert ConnectionSet.cyclic(5, [1, 4]).mask == 0b10010


# ---------------- GRAPHS ----------------

def test_make_graph_deduplicates(triangle):
    """ Reversed and repeated edges are merged """
    k2 = make_graph(2, [(0, 1), (1, 0)])
    assert k2.edge_count == 1
    assert triangle.edge_count == 3
    assert triangle.edges == ((0, 1), (0, 2), (1, 2))

def test_make_graph_rejects_self_loop():
    """ Self-loops are input errors """
    with pytest.raises(ValidationError):
        make_graph(2, [(0, 0)])

def test_make_graph_rejects_out_of_range():
    """ Endpoints outside [0, n) are input errors """
    with pytest.raises(ValidationError):
        make_graph(3, [(0, 3)])

def test_graph_rejects_asymmetric_rows():
    """ Adjacency must be symmetric """
    with pytest.raises(ValidationError):
        Graph(2, (0b10, 0b00))

def test_graph_vt_needs_symmetries():
    """ vt can only be set together with generating symmetries """
    with pytest.raises(ValidationError):
        Graph(2, (0b10, 0b01), vt=True)

def test_graph_equality_ignores_label(triangle):
    """ Graphs compare by vertex count and adjacency only """
    other = make_graph(3, [(2, 1), (0, 2), (1, 0)], label="another triangle")
    assert other == triangle

def test_graph_degree_and_neighbors(triangle):
    """ Degree and neighbour lists come from the bit rows """
    assert triangle.degree(0) == 2
    assert triangle.neighbors(1) == [0, 2]
    assert triangle.has_edge(2, 0)

def test_graph_to_networkx(triangle):
    """ The networkx view has the same vertices and edges """
    nxg = triangle.to_networkx()
    assert nxg.number_of_nodes() == 3
    assert nxg.number_of_edges() == 3
