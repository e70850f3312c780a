"""
Chromatic number tests for the invariants app

Includes tests for:
- ExactSimplex: optimum, duals and error cases
- fractional_chromatic: LP and vertex-transitive witnesses, check_witness
- chromatic_number and circular_chromatic on named graphs
- chromatic_number against exhaustive colorings of small random graphs
- memoised results handed out as fresh lists
"""

import random
from fractions import Fraction
from itertools import product

import pytest

from gyrochromatic.exceptions import BudgetExceeded, ValidationError
from gyrochromatic.graphs import (
    cartesian,
    circular_clique,
    complete,
    cycle,
    disjoint_union,
    g5,
    is_homomorphism,
    kneser,
    lexicographic,
    line_graph,
    make_graph,
    petersen,
)
from gyrochromatic.invariants import (
    ExactSimplex,
    FractionalWitness,
    check_witness,
    chromatic_number,
    circular_chromatic,
    fractional_chromatic,
)


# ---------------- SIMPLEX ----------------

def test_simplex_covering_lp():
    """ min x1 + x2 with x1 + x2 >= 1 and x2 >= 1/2 (surplus columns) """
    costs = [1, 1, 0, 0]
    rows = [[1, 1, -1, 0], [0, 1, 0, -1]]
    solution = ExactSimplex(costs, rows, [1, Fraction(1, 2)]).solve()
    assert solution.objective == 1
    assert sum(solution.x[:2]) == 1
    assert solution.x[1] >= Fraction(1, 2)
    # strong duality on the right-hand sides
    assert solution.y[0] * 1 + solution.y[1] * Fraction(1, 2) == 1

def test_simplex_rejects_negative_rhs():
    """ Right-hand sides must be non-negative """
    with pytest.raises(ValidationError):
        ExactSimplex([1], [[1]], [-1])

def test_simplex_detects_infeasibility():
    """ x = 1 and -x = 1 have no common non-negative solution """
    with pytest.raises(ValidationError):
        ExactSimplex([1], [[1], [-1]], [1, 1]).solve()

def test_simplex_detects_unboundedness():
    """ min -x with x - s = 0 is unbounded below """
    with pytest.raises(ValidationError):
        ExactSimplex([-1, 0], [[1, -1]], [0]).solve()


# ---------------- FRACTIONAL CHROMATIC NUMBER ----------------

@pytest.mark.parametrize("graph, value", [
    (cycle(5), Fraction(5, 2)),
    (petersen(), Fraction(5, 2)),
    (g5(), Fraction(25, 4)),
    (lexicographic(complete(2), cycle(5)), Fraction(5)),
    (complete(4), Fraction(4)),
    (kneser(6, 2), Fraction(3)),
])
def test_fractional_chromatic_known_values(graph, value):
    """ chi_f of vertex-transitive constructions is n / alpha """
    witness = fractional_chromatic(graph)
    assert witness.value == value
    assert check_witness(graph, witness)

def test_fractional_chromatic_through_lp():
    """ A relabelled C5 carries no vt flag and goes through the LP """
    graph = make_graph(5, cycle(5).edges)
    witness = fractional_chromatic(graph)
    assert witness.method == "lp"
    assert witness.value == Fraction(5, 2)
    assert witness.primal_total == witness.dual_total == Fraction(5, 2)
    assert check_witness(graph, witness)

def test_vertex_transitive_witness_matches_lp():
    """ The orbit witness and the LP agree on Petersen """
    orbit = fractional_chromatic(petersen())
    lp = fractional_chromatic(make_graph(10, petersen().edges))
    assert orbit.method == "vertex-transitive"
    assert orbit.value == lp.value

def test_fractional_chromatic_of_line_petersen():
    """ L(Petersen) has chi_f = 3 """
    assert fractional_chromatic(line_graph(petersen())).value == 3

def test_fractional_chromatic_of_union():
    """ chi_f of a disjoint union is the maximum over the parts """
    assert fractional_chromatic(disjoint_union(complete(3), cycle(5))).value == 3

def test_fractional_chromatic_edgeless():
    """ Edgeless graphs have chi_f = 1 """
    assert fractional_chromatic(make_graph(3, [])).value == 1

def test_fractional_chromatic_column_cap():
    """ Too many maximal independent sets for the cap raise BudgetExceeded """
    with pytest.raises(BudgetExceeded):
        fractional_chromatic(make_graph(5, cycle(5).edges), column_cap=3)

@pytest.mark.slow
def test_fractional_chromatic_of_product_example():
    """ K5 □ K2[C5] has alpha 9 and chi_f = 50/9 """
    product = cartesian(complete(5), lexicographic(complete(2), cycle(5)))
    assert fractional_chromatic(product).value == Fraction(50, 9)

def test_check_witness_rejects_tampering():
    """ A witness with a wrong value or an overweight dual fails """
    graph = cycle(5)
    witness = fractional_chromatic(graph)
    inflated = FractionalWitness(Fraction(2), witness.primal, witness.dual)
    assert not check_witness(graph, inflated)
    heavy = FractionalWitness(witness.value, witness.primal, (Fraction(1),) * 2 + (Fraction(1, 6),) * 3)
    assert not check_witness(graph, heavy)


# ---------------- CHROMATIC / CIRCULAR ----------------

@pytest.mark.parametrize("graph, chi", [
    (cycle(5), 3),
    (complete(5), 5),
    (petersen(), 3),
    (lexicographic(complete(2), cycle(5)), 6),
    (line_graph(petersen()), 4),
    (make_graph(3, []), 1),
])
def test_chromatic_number(graph, chi):
    """ chi with a proper coloring using colors 0..chi-1 """
    value, coloring = chromatic_number(graph)
    assert value == chi
    assert set(coloring) == set(range(chi))
    assert all(coloring[u] != coloring[v] for u, v in graph.edges)

@pytest.mark.parametrize("graph, chi_c", [
    (cycle(5), Fraction(5, 2)),
    (cycle(7), Fraction(7, 3)),
    (complete(4), Fraction(4)),
    (petersen(), Fraction(3)),
    (lexicographic(complete(2), cycle(5)), Fraction(6)),
    (circular_clique(7, 3), Fraction(7, 3)),
    (make_graph(2, []), Fraction(1)),
])
def test_circular_chromatic(graph, chi_c):
    """ chi_c with a homomorphism into K_{p/q} """
    value, hom = circular_chromatic(graph)
    assert value == chi_c
    if graph.edge_count:
        assert is_homomorphism(graph, circular_clique(value.numerator, value.denominator), hom)

def test_sandwich_on_named_graphs():
    """ chi_f <= chi_c <= chi and chi = ceil(chi_c) """
    for graph in (cycle(5), petersen(), lexicographic(complete(2), cycle(5)), kneser(6, 2)):
        chi_f = fractional_chromatic(graph).value
        chi_c, _ = circular_chromatic(graph)
        chi, _ = chromatic_number(graph)
        assert chi_f <= chi_c <= chi
        assert chi == -(-chi_c.numerator // chi_c.denominator)

def exhaustive_chromatic(graph) -> int:
    for k in range(1, graph.n + 1):
        if any(all(c[u] != c[v] for u, v in graph.edges) for c in product(range(k), repeat=graph.n)):
            return k
    return graph.n

def random_graphs(seed, count, max_n):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_n)
        yield make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])

@pytest.mark.parametrize("seed", [4, 5])
def test_chromatic_number_matches_exhaustive_coloring(seed):
    """ chi agrees with trying every coloring on graphs with at most 6 vertices """
    for graph in random_graphs(seed, 25, 6):
        value, coloring = chromatic_number(graph)
        assert value == exhaustive_chromatic(graph)
        assert all(coloring[u] != coloring[v] for u, v in graph.edges)

def test_memoised_results_are_fresh_lists():
    """ Changing a returned coloring does not change later answers """
    _, coloring = chromatic_number(petersen())
    _, hom = circular_chromatic(petersen())
    coloring[0] = hom[0] = 99
    assert chromatic_number(petersen())[1][0] != 99
    assert circular_chromatic(petersen())[1][0] != 99

@pytest.mark.slow
def test_chromatic_number_of_g5():
    """ G_5 needs at least ceil(25/4) = 7 colors; chi and chi_c agree on the ceiling """
    chi, coloring = chromatic_number(g5())
    chi_c, _ = circular_chromatic(g5())
    assert chi >= 7
    assert all(coloring[u] != coloring[v] for u, v in g5().edges)
    assert chi == -(-chi_c.numerator // chi_c.denominator)
