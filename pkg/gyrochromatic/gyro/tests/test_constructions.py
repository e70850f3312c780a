"""
Construction and bound tests for the gyro app

Includes tests for:
- bases from independent sets, circular colorings and homomorphisms
- product lifting, modulus expansion, CRT inflation and group changes
- input and output verification of every construction
- gyro_upper_bound / gyro_lower_bound / compute_bounds
"""

from fractions import Fraction
from types import SimpleNamespace
from unittest.mock import patch

import pytest

from gyrochromatic.certs import builtin_seeds, figure1_graph, prop62_certificate
from gyrochromatic.exceptions import InvariantViolation, ValidationError
from gyrochromatic.graphs import (
    AbelianGroup,
    cartesian,
    complete,
    cycle,
    g5,
    hamming_cayley,
    line_graph,
    make_graph,
    petersen,
)
from gyrochromatic.gyro import (
    BaseCertificate,
    base_from_circular_coloring,
    base_from_independent_set,
    compose_with_homomorphism,
    compute_bounds,
    crt_inflate,
    expand_modulus,
    extend_group,
    gyro_lower_bound,
    gyro_upper_bound,
    kneser_characteristic_hom,
    lift_base_to_product,
    pullback_to_cyclic_power,
    verify_base,
)
from gyrochromatic.invariants import circular_chromatic, independence_number


# ---------------- FIXTURES ----------------

@pytest.fixture
def c5_base():
    """ A = {0, 2} over Z_5 with f = identity """
    return base_from_independent_set(cycle(5), [0, 2])

@pytest.fixture
def k2_base():
    """ A = {0} over Z_2 with f = (0, 1) """
    return BaseCertificate(AbelianGroup((2,)), [(0,)], [(0,), (1,)])


# ---------------- BASES FROM STRUCTURE ----------------

def test_base_from_independent_set(c5_base):
    """ An independent set of a Cayley graph is a base with f = identity """
    assert c5_base.density == Fraction(2, 5)
    assert verify_base(cycle(5), c5_base).valid

def test_base_from_independent_set_errors():
    """ The graph must be a Cayley graph and the set independent """
    with pytest.raises(ValidationError):
        base_from_independent_set(petersen(), [0])
    with pytest.raises(ValidationError):
        base_from_independent_set(cycle(5), [0, 1])

def test_base_from_circular_coloring():
    """ A K_{p/q}-coloring gives the arc base {0..q-1} of Z_p """
    value, hom = circular_chromatic(cycle(5))
    cert = base_from_circular_coloring(cycle(5), value.numerator, value.denominator, hom)
    assert cert.A == ((0,), (1,))
    assert cert.density == Fraction(2, 5)
    assert verify_base(cycle(5), cert).valid

def test_base_from_circular_coloring_rejects_non_homomorphism():
    """ The map must be a homomorphism into K_{p/q} """
    with pytest.raises(ValidationError):
        base_from_circular_coloring(cycle(5), 5, 2, [0] * 5)

def test_kneser_through_hamming_cayley():
    """ The indicator map pulls a base of C(Z_2^5, weight 4) back to Petersen """
    hom = kneser_characteristic_hom(5, 2)
    target = hamming_cayley(5, 4)
    alpha, independent = independence_number(target)
    cert = compose_with_homomorphism(petersen(), target, hom, base_from_independent_set(target, independent))
    assert verify_base(petersen(), cert).valid
    assert cert.density == Fraction(alpha, 32)
    assert cert.density <= Fraction(2, 5)


# ---------------- PRODUCTS AND GROUP CHANGES ----------------

def test_lift_base_to_product(c5_base):
    """ f'(v,v') = f(v) + f(v') is a base of G □ G with the same density """
    lifted = lift_base_to_product(cycle(5), c5_base)
    assert verify_base(cartesian(cycle(5), cycle(5)), lifted).valid
    assert lifted.density == c5_base.density

def test_lift_rejects_invalid_base(c5_base):
    """ Only valid bases are lifted """
    broken = BaseCertificate(c5_base.group, c5_base.A, [(0,)] * 5)
    with pytest.raises(ValidationError):
        lift_base_to_product(cycle(5), broken)

def test_expand_modulus(c5_base):
    """ Z_5 -> Z_10 gives |A| = 4 and keeps validity """
    expanded = expand_modulus(cycle(5), c5_base, 2)
    assert expanded.group == AbelianGroup((10,))
    assert len(expanded.A) == 4
    assert expanded.density == Fraction(2, 5)
    assert verify_base(cycle(5), expanded).valid
    assert expand_modulus(cycle(5), c5_base, 1) is c5_base

def test_expand_modulus_rejects_bad_factor(c5_base):
    """ The factor must be positive """
    with pytest.raises(ValidationError):
        expand_modulus(cycle(5), c5_base, 0)

def test_crt_inflate_single_prime(k2_base):
    """ K2 over Z_2 with k = 1 and p = 5 gives A' = {2}, density 1/5 """
    inflated = crt_inflate(complete(2), k2_base, 1, [5])
    assert inflated.A == ((2,),)
    assert inflated.density == Fraction(1, 5)
    assert verify_base(complete(2), inflated).valid

def test_crt_inflate_g5():
    """ G_5 over Z_5^2 with primes 11 and 13 gives density 4/143 """
    inflated = crt_inflate(g5(), prop62_certificate(), 1, [11, 13])
    assert inflated.group == AbelianGroup((143,))
    assert inflated.density == Fraction(4, 143)
    assert verify_base(g5(), inflated).valid

@pytest.mark.parametrize("k, primes", [
    (1, [7]),      # outside the window (4, 6)
    (1, [4]),      # not prime
    (0, [5]),      # k must be positive
    (1, [5, 5]),   # wrong count for Z_2
])
def test_crt_inflate_errors(k2_base, k, primes):
    """ Primes must be distinct, prime, in the window, one per factor """
    with pytest.raises(ValidationError):
        crt_inflate(complete(2), k2_base, k, primes)

def test_crt_inflate_rejects_mixed_moduli():
    """ Only groups Z_N^d are inflated """
    cert = BaseCertificate(AbelianGroup((2, 3)), [(0, 0)], [(0, 0), (1, 0)])
    with pytest.raises(ValidationError):
        crt_inflate(complete(2), cert, 1, [5, 7])

def test_pullback_to_cyclic_power():
    """ Z_2 x Z_3 -> Z_6^2 keeps density and validity """
    cert = BaseCertificate(AbelianGroup((2, 3)), [(0, 0)], [(0, 0), (1, 0)])
    pulled = pullback_to_cyclic_power(complete(2), cert)
    assert pulled.group == AbelianGroup((6, 6))
    assert pulled.density == Fraction(1, 6)
    assert verify_base(complete(2), pulled).valid

def test_extend_group(c5_base):
    """ Z -> Z x Z' keeps density and validity """
    extended = extend_group(cycle(5), c5_base, (2,))
    assert extended.group == AbelianGroup((5, 2))
    assert extended.density == c5_base.density
    assert verify_base(cycle(5), extended).valid


# ---------------- CHECKED CONSTRUCTIONS ----------------

def test_compose_rejects_non_homomorphism(k2_base):
    """ C5 is not bipartite, so no map to K2 is composed """
    with pytest.raises(ValidationError):
        compose_with_homomorphism(cycle(5), complete(2), [0, 1, 0, 1, 0], k2_base)

def test_compose_rejects_invalid_base():
    """ The base of the target graph must verify """
    broken = BaseCertificate(AbelianGroup((2,)), [(0,)], [(0,), (0,)])
    with pytest.raises(ValidationError):
        compose_with_homomorphism(complete(2), complete(2), [1, 0], broken)

@pytest.mark.parametrize("construct", [
    lambda cert: expand_modulus(cycle(5), cert, 2),
    lambda cert: crt_inflate(cycle(5), cert, 1, [11]),
    lambda cert: extend_group(cycle(5), cert, (2,)),
    lambda cert: pullback_to_cyclic_power(cycle(5), cert),
])
def test_group_changes_reject_invalid_input(construct, c5_base):
    """ An input that is not a base of the graph is an input error """
    broken = BaseCertificate(c5_base.group, c5_base.A, [(0,)] * 5)
    with pytest.raises(ValidationError):
        construct(broken)

def test_invalid_output_is_an_invariant_violation(c5_base):
    """ A construction whose result fails verify_base raises InvariantViolation """
    reports = [SimpleNamespace(valid=True, message=""), SimpleNamespace(valid=False, message="A - A meets S")]
    with patch("gyrochromatic.gyro.constructions.verify_base", side_effect=reports):
        with pytest.raises(InvariantViolation):
            expand_modulus(cycle(5), c5_base, 2)


# ---------------- BOUNDS ----------------

def test_upper_bound_of_c5():
    """ C5 reaches chi_c = 5/2 """
    value, cert, exact = gyro_upper_bound(cycle(5), nmax=5)
    assert value == Fraction(5, 2)
    assert exact
    assert verify_base(cycle(5), cert).valid

def test_upper_bound_of_edgeless_graph():
    """ Edgeless graphs have gyrochromatic number 1 """
    value, cert, exact = gyro_upper_bound(make_graph(4, []), nmax=3)
    assert value == 1
    assert cert.density == 1

def test_upper_bound_rejects_small_nmax():
    """ Nmax must be at least 2 """
    with pytest.raises(ValidationError):
        gyro_upper_bound(cycle(5), nmax=1)

def test_upper_bound_ignores_invalid_seeds():
    """ Seeds that fail verification never become the answer """
    bad = BaseCertificate(AbelianGroup((11,)), [(x,) for x in range(5)], [(0,)] * 5)
    value, cert, _ = gyro_upper_bound(cycle(5), nmax=2, seeds=[bad])
    assert value == Fraction(5, 2)
    assert cert.group != bad.group

def test_upper_bound_searches_extra_groups():
    """ Extra groups are searched; ties keep the earlier circular seed """
    value, cert, exact = gyro_upper_bound(cycle(5), nmax=2, extra_groups=["10", AbelianGroup((5, 2))])
    assert value == Fraction(5, 2)
    assert exact
    assert cert.group == AbelianGroup((5,))

def test_lower_bound_of_c5():
    """ The fractional chromatic number is the lower bound for C5 """
    assert gyro_lower_bound(cycle(5)) == (Fraction(5, 2), "fractional")

def test_lower_bound_from_clique_lemma():
    """ L(Petersen): 15 * 3 / 14 beats chi_f = 3 """
    assert gyro_lower_bound(line_graph(petersen()), use_product_trick=False) == (Fraction(45, 14), "clique-lemma")

def test_compute_bounds_of_petersen():
    """ 5/2 <= chi_g <= 3 for Petersen, everything exact """
    report = compute_bounds(petersen(), nmax=6)
    assert report.chi_f == Fraction(5, 2)
    assert report.gyro_lower == Fraction(5, 2)
    assert report.gyro_upper == 3
    assert report.chi_c == 3
    assert report.chi == 3
    assert report.is_exact
    assert verify_base(petersen(), report.upper_certificate).valid

@pytest.mark.slow
def test_compute_bounds_of_figure1_graph():
    """ K5 ∪ K2[C5]: 50/9 from the product trick, 40/7 from the built-in seed """
    graph = figure1_graph()
    report = compute_bounds(graph, nmax=2, seeds=builtin_seeds(graph))
    assert report.chi_f == 5
    assert report.gyro_lower == Fraction(50, 9)
    assert report.lower_provenance == "product-trick"
    assert report.gyro_upper == Fraction(40, 7)
    assert report.chi_c == 6
