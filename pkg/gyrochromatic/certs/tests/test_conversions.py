"""
Gyrocoloring tests for the certs app

Includes tests for:
- ContinuousGyrocoloring: validation, interval merging and arcs
- discretize / continuous_from_base / verify_gyrocoloring
- the built-in certificates and the 25 x 25 translate matrix
"""

from fractions import Fraction

import pytest

from gyrochromatic.certs import (
    ContinuousGyrocoloring,
    bareiss_determinant,
    builtin_seeds,
    continuous_from_base,
    discretize,
    figure1_certificate,
    figure1_graph,
    gyrocoloring_plot_data,
    lemma63_matrix,
    lemma63_matrix_check,
    prop62_certificate,
    verify_gyrocoloring,
)
from gyrochromatic.certs.models import rational
from gyrochromatic.exceptions import ValidationError
from gyrochromatic.graphs import AbelianGroup, cycle, g5
from gyrochromatic.gyro import base_from_independent_set, verify_base


# ---------------- FIXTURES ----------------

@pytest.fixture
def c5_coloring():
    """ 5/2-gyrocoloring of C5: base [0, 1), vertex k shifted by k mod 5/2 """
    shifts = (0, 1, 2, Fraction(1, 2), Fraction(3, 2))
    return ContinuousGyrocoloring(Fraction(5, 2), ((0, 1),), shifts)


# ---------------- RATIONALS ----------------

def test_rational_accepts_exact_values():
    """ ints, Fractions and 'p/q' strings are exact """
    assert rational(3) == 3
    assert rational("3/4") == Fraction(3, 4)
    assert rational(Fraction(1, 2)) == Fraction(1, 2)

@pytest.mark.parametrize("value", [0.5, True, "abc", None])
def test_rational_rejects_inexact_values(value):
    """ floats, booleans and garbage are input errors """
    with pytest.raises(ValidationError):
        rational(value)


# ---------------- CONTINUOUS GYROCOLORINGS ----------------

def test_touching_intervals_are_merged():
    """ [0,1/2) and [1/2,1) become [0,1) """
    coloring = ContinuousGyrocoloring(2, ((Fraction(1, 2), 1), (0, Fraction(1, 2))), (0,))
    assert coloring.base == ((0, 1),)
    assert coloring.length == 1

def test_overlapping_intervals_are_rejected():
    """ Overlaps are input errors """
    with pytest.raises(ValidationError):
        ContinuousGyrocoloring(2, ((0, 1), (Fraction(1, 2), Fraction(3, 2))), (0,))

@pytest.mark.parametrize("base, shifts", [
    (((0, 3),), (0,)),        # interval beyond z
    (((1, 1),), (0,)),        # empty interval
    (((0, 1),), (2,)),        # shift outside [0, z)
    (((0, 1),), (-1,)),
])
def test_out_of_range_values_are_rejected(base, shifts):
    """ Intervals and shifts must lie in [0, z) """
    with pytest.raises(ValidationError):
        ContinuousGyrocoloring(2, base, shifts)

def test_arcs_wrap_around():
    """ An arc crossing z is split at the origin """
    coloring = ContinuousGyrocoloring(Fraction(5, 2), ((0, 1),), (2,))
    assert coloring.arcs(0) == [(0, Fraction(1, 2)), (2, Fraction(5, 2))]

def test_c5_coloring_is_valid(c5_coloring):
    """ Adjacent shifts differ by at least 1 around the circle """
    assert verify_gyrocoloring(cycle(5), c5_coloring).valid

def test_plot_data(c5_coloring):
    """ Plot data lists every vertex with its arcs as strings """
    data = gyrocoloring_plot_data(c5_coloring)
    assert data["z"] == "5/2"
    assert len(data["vertices"]) == 5
    assert data["vertices"][3]["arcs"] == [["1/2", "3/2"]]


# ---------------- DISCRETIZATION ----------------

def test_discretize_figure1():
    """ The 40/7 coloring lands in Z_80 with |A| = 14 """
    cert = discretize(figure1_certificate())
    assert cert.group == AbelianGroup((80,))
    assert len(cert.A) == 14
    assert cert.density == Fraction(7, 40)
    assert verify_base(figure1_graph(), cert).valid

def test_verify_figure1_coloring():
    """ The built-in coloring is a valid gyrocoloring of K5 ∪ K2[C5] """
    assert verify_gyrocoloring(figure1_graph(), figure1_certificate()).valid

def test_tampered_figure1_coloring_collides():
    """ Giving two clique vertices the same shift breaks validity on their edge """
    coloring = figure1_certificate()
    shifts = list(coloring.shifts)
    shifts[1] = shifts[0]
    report = verify_gyrocoloring(figure1_graph(), ContinuousGyrocoloring(coloring.z, coloring.base, tuple(shifts)))
    assert not report.valid
    assert report.edge == (0, 1)

def test_discretize_requires_unit_length():
    """ The base must have total length 1 """
    with pytest.raises(ValidationError):
        discretize(ContinuousGyrocoloring(3, ((0, 2),), (0,)))

def test_discretize_with_scale(c5_coloring):
    """ A finer grid multiplies the group order and keeps the density """
    cert = discretize(c5_coloring, scale=4)
    assert cert.group == AbelianGroup((10,))
    assert cert.density == Fraction(2, 5)
    assert verify_base(cycle(5), cert).valid

def test_continuous_round_trip():
    """ base -> gyrocoloring -> base on the |A| grid gives the original certificate """
    cert = base_from_independent_set(cycle(5), [0, 2])
    coloring = continuous_from_base(cert)
    assert coloring.z == Fraction(5, 2)
    assert discretize(coloring, scale=len(cert.A)) == cert
    assert verify_gyrocoloring(cycle(5), coloring).valid

def test_continuous_from_base_needs_cyclic_group():
    """ Only Z_N bases have a continuous counterpart """
    with pytest.raises(ValidationError):
        continuous_from_base(prop62_certificate())


# ---------------- BUILT-INS ----------------

def test_prop62_certificate():
    """ The square base of G_5 has density 4/25 """
    cert = prop62_certificate()
    assert verify_base(g5(), cert).valid
    assert cert.density == Fraction(4, 25)

def test_builtin_seeds():
    """ Seeds only apply to the graph they were built for """
    assert len(builtin_seeds(g5())) == 1
    assert len(builtin_seeds(figure1_graph())) == 1
    assert builtin_seeds(cycle(5)) == []


# ---------------- LINEAR ALGEBRA ----------------

@pytest.mark.parametrize("matrix, det", [
    ([[2, 1], [1, 3]], 5),
    ([[0, 1], [1, 0]], -1),
    ([[1, 2], [2, 4]], 0),
    ([[2, 0, 0], [0, 3, 0], [0, 0, 4]], 24),
    ([], 1),
])
def test_bareiss_determinant(matrix, det):
    """ Fraction-free elimination on small integer matrices """
    assert bareiss_determinant(matrix) == det

def test_bareiss_rejects_non_square():
    """ Only square matrices have a determinant """
    with pytest.raises(ValidationError):
        bareiss_determinant([[1, 2]])

def test_translate_matrix_is_invertible():
    """ The 25 x 25 translate incidence matrix has determinant 1024 """
    matrix = lemma63_matrix()
    assert all(sum(row) == 4 for row in matrix)
    assert all(sum(col) == 4 for col in zip(*matrix))
    assert lemma63_matrix_check() == (1024, True)
