"""
Reproduce suite

Each Criterion pairs an expected value with a function computing it;
cmd_reproduce runs them in order and reports expected vs computed.
Random corpora are drawn from the configured seed.
"""

from __future__ import annotations

import math
import random
import time
from fractions import Fraction
from typing import Optional

import networkx as nx
from mylogger import Logger

from gyrochromatic.certs import (
    discretize,
    figure1_certificate,
    figure1_graph,
    lemma63_matrix_check,
    prop62_certificate,
    verify_gyrocoloring,
)
from gyrochromatic.cli.models import Criterion, CriterionResult, RunConfig
from gyrochromatic import settings
from gyrochromatic.exceptions import BudgetExceeded, GyroError
from gyrochromatic.graphs import (
    AbelianGroup,
    Graph,
    cartesian,
    circulant,
    complete,
    cycle,
    g5,
    hamming_cayley,
    lexicographic,
    line_graph,
    make_graph,
    petersen,
)
from gyrochromatic.gyro import (
    BaseCertificate,
    base_from_independent_set,
    compose_with_homomorphism,
    crt_inflate,
    expand_modulus,
    extend_group,
    gyro_lower_bound,
    gyro_upper_bound,
    kneser_characteristic_hom,
    lift_base_to_product,
    pullback_to_cyclic_power,
    sigma_group_exact,
    verify_base,
)
from gyrochromatic.gyro.constructions import is_prime
from gyrochromatic.gyro.search import cayley_graph_from_mask
from gyrochromatic.invariants import (
    chromatic_number,
    circular_chromatic,
    clique_number,
    enumerate_maximum_independent_sets,
    fractional_chromatic,
    independence_number,
)

logger = Logger()


# ----------------------- RANDOM CORPORA -----------------------

def random_graph(rng: random.Random, n_max: int, n_min: int = 2) -> Graph:
    n = rng.randint(n_min, n_max)
    nxg = nx.gnp_random_graph(n, rng.choice((0.3, 0.5, 0.7)), seed=rng.randrange(2**32))
    return make_graph(n, nxg.edges(), label=f"gnp({n})")


def random_circulant(rng: random.Random, n_max: int = 13):
    modulus = rng.randint(3, n_max)
    half = [r for r in range(1, modulus // 2 + 1) if rng.random() < 0.5] or [1]
    residues = {r for r in half} | {modulus - r for r in half}
    return circulant(modulus, residues)


def random_base(rng: random.Random, g, max_modulus: int = 8):
    """ A proper map into some Z_N and a maximum independent set of C(Z_N, S_f) """
    for _ in range(200):
        modulus = rng.randint(2, max_modulus)
        f = [rng.randrange(modulus) for _ in range(g.n)]
        if any(f[u] == f[v] for u, v in g.edges):
            continue
        group = AbelianGroup((modulus,))
        mask = 0
        for u, v in g.edges:
            d = (f[u] - f[v]) % modulus
            mask |= 1 << d | 1 << (-d % modulus)
        _, independent = independence_number(cayley_graph_from_mask(group, mask))
        return BaseCertificate(group, [(x,) for x in independent], [(x,) for x in f], graph_label=g.label)
    return None


def primes_in_window(low: int, high: int, count: int):
    found = [p for p in range(low + 1, high) if is_prime(p)]
    return found[:count] if len(found) >= count else None


# ----------------------- CRITERIA -----------------------

def g5_structure():
    sets = enumerate_maximum_independent_sets(g5())
    group = AbelianGroup((5, 5))
    blocks = sorted(
        sorted(group.index(group.add(v, d)) for d in ((0, 0), (0, 1), (1, 0), (1, 1)))
        for v in group.elements
    )
    return len(sets), sets == blocks


def g5_certificate():
    graph = g5()
    cert = prop62_certificate()
    return verify_base(graph, cert).valid, cert.density, fractional_chromatic(graph).value


def product_example():
    product = cartesian(complete(5), lexicographic(complete(2), cycle(5)))
    return independence_number(product)[0], fractional_chromatic(product).value


def figure1_sandwich():
    graph = figure1_graph()
    coloring = figure1_certificate()
    cert = discretize(coloring)
    lower, _ = gyro_lower_bound(graph, use_product_trick=True)
    chi_c, _ = circular_chromatic(graph)
    return (
        verify_gyrocoloring(graph, coloring).valid,
        cert.group.order,
        len(cert.A),
        lower,
        1 / cert.density,
        chi_c,
        fractional_chromatic(graph).value,
    )


def circular_values():
    k2c5 = lexicographic(complete(2), cycle(5))
    return (
        circular_chromatic(cycle(5))[0],
        chromatic_number(k2c5)[0],
        circular_chromatic(k2c5)[0],
        circular_chromatic(petersen())[0],
    )


def clique_lemma_example():
    graph = line_graph(petersen())
    lower, _ = gyro_lower_bound(graph, use_product_trick=False)
    return clique_number(graph), chromatic_number(graph)[0], fractional_chromatic(graph).value, lower


def circulant_equality(seed: int, count: int = 30):
    rng = random.Random(seed)
    for _ in range(count):
        graph = random_circulant(rng)
        alpha, _ = independence_number(graph)
        density, _, exact = sigma_group_exact(graph, graph.cayley.group)
        if not exact or density != Fraction(alpha, graph.n):
            logger.warning(f"{graph}: sigma {density} but alpha/N = {Fraction(alpha, graph.n)}")
            return False
    return True


def construction_validity(seed: int, count: int = 50):
    rng = random.Random(seed)
    checked = 0
    while checked < count:
        graph = random_graph(rng, 6)
        if not graph.edge_count:
            continue
        cert = random_base(rng, graph)
        if cert is None:
            continue
        checked += 1
        lifted = lift_base_to_product(graph, cert)
        if not verify_base(cartesian(graph, graph), lifted).valid or lifted.density != cert.density:
            return False
        m = rng.randint(1, 4)
        expanded = expand_modulus(graph, cert, m)
        if not verify_base(graph, expanded).valid or expanded.density != cert.density:
            return False
        for d in (1, 2):
            k = rng.randint(1, 2)
            # Z_N x Z_m pulled back to Z_L^2, L = lcm(N, m)
            source = cert if d == 1 else pullback_to_cyclic_power(graph, extend_group(graph, cert, (rng.randint(2, 3),)))
            if source.density != cert.density:
                return False
            modulus = source.group.moduli[0]
            primes = primes_in_window((k + 1) * modulus, (k + 2) * modulus, d)
            if primes is None:
                continue
            inflated = crt_inflate(graph, source, k, primes)
            expected = Fraction(k ** d * len(source.A), math.prod(primes))
            if not verify_base(graph, inflated).valid or inflated.density != expected:
                return False
    return True


def sandwich_consistency(seed: int, count: int = 50, nmax: int = 10):
    rng = random.Random(seed)
    for _ in range(count):
        graph = random_graph(rng, 8)
        chi_f = fractional_chromatic(graph).value
        chi_c, _ = circular_chromatic(graph)
        chi, _ = chromatic_number(graph)
        lower, _ = gyro_lower_bound(graph)
        upper, _, _ = gyro_upper_bound(graph, nmax=nmax)
        if not (chi_f <= lower <= upper <= chi_c and chi == math.ceil(chi_c)):
            logger.warning(f"{graph}: {chi_f} <= {lower} <= {upper} <= {chi_c}, chi={chi} fails")
            return False
    return True


def kneser_toy():
    hom = kneser_characteristic_hom(5, 2)
    target = hamming_cayley(5, 4)
    alpha, independent = independence_number(target)
    cert = compose_with_homomorphism(petersen(), target, hom, base_from_independent_set(target, independent))
    return verify_base(petersen(), cert).valid and cert.density == Fraction(alpha, 32) <= Fraction(2, 5)


def g5_cyclic_groups(max_modulus: int = 12, budget: Optional[int] = None):
    """ True when every Z_N, N <= max_modulus, is searched to the end without a base of density 4/25 """
    graph = g5()
    budget = settings.BUDGET if budget is None else budget
    for modulus in range(2, max_modulus + 1):
        density, _, exact = sigma_group_exact(graph, AbelianGroup((modulus,)), budget=budget)
        if density >= Fraction(4, 25):
            return False
        if not exact:
            raise BudgetExceeded(f"search over Z_{modulus} for G_5 did not finish", limit=budget, partial=density)
    return True


def build_criteria(seed: int) -> list[Criterion]:
    return [
        Criterion("g5-structure", "25 maximum independent sets of G_5, all translates of one square",
                  (25, True), g5_structure),
        Criterion("g5-certificate", "Z_5^2 base of density 4/25 and chi_f(G_5) = 25/4",
                  (True, Fraction(4, 25), Fraction(25, 4)), g5_certificate),
        Criterion("product-example", "alpha and chi_f of K5 □ K2[C5]",
                  (9, Fraction(50, 9)), product_example, slow=True),
        Criterion("figure1-sandwich", "chi_f < 50/9 <= chi_g <= 40/7 < chi_c for K5 ∪ K2[C5]",
                  (True, 80, 14, Fraction(50, 9), Fraction(40, 7), Fraction(6), Fraction(5)),
                  figure1_sandwich, slow=True),
        Criterion("circular-values", "chi_c(C5), chi(K2[C5]), chi_c(K2[C5]), chi_c(Petersen)",
                  (Fraction(5, 2), 6, Fraction(6), Fraction(3)), circular_values),
        Criterion("clique-lemma", "omega, chi, chi_f and gyro lower bound of L(Petersen)",
                  (3, 4, Fraction(3), Fraction(45, 14)), clique_lemma_example),
        Criterion("circulant-equality", "sigma_{Z_N}(C(N,S)) = alpha/N on 30 random circulants",
                  True, lambda: circulant_equality(seed)),
        Criterion("construction-validity", "product lift, modulus expansion and CRT inflation stay valid",
                  True, lambda: construction_validity(seed)),
        Criterion("sandwich-consistency", "chi_f <= lower <= upper <= chi_c and chi = ceil(chi_c)",
                  True, lambda: sandwich_consistency(seed), slow=True),
        Criterion("kneser-toy", "Petersen base through the indicator map into C(Z_2^5, weight 4)",
                  True, kneser_toy),
        Criterion("g5-cyclic-groups", "sigma_{Z_N}(G_5) < 4/25 for every N <= 12",
                  True, g5_cyclic_groups, slow=True),
        Criterion("matrix-invertible", "determinant of the 25 x 25 translate incidence matrix",
                  (1024, True), lemma63_matrix_check),
    ]


def run_criterion(criterion: Criterion, skip_slow: bool = False) -> CriterionResult:
    if skip_slow and criterion.slow:
        return CriterionResult(criterion.name, criterion.expected, None, "SKIP")
    start = time.perf_counter()
    try:
        with logger.timer(criterion.name, level="INFO"):
            computed = criterion.compute()
        status = "PASS" if computed == criterion.expected else "FAIL"
    except GyroError as exc:
        logger.error(f"{criterion.name} raised {type(exc).__name__}: {exc}")
        computed, status = f"{type(exc).__name__}: {exc}", "ERROR"
    duration = (time.perf_counter() - start) * 1000.0
    if status == "FAIL":
        logger.error(f"{criterion.name}: expected {criterion.expected!r}, computed {computed!r}")
    return CriterionResult(criterion.name, criterion.expected, computed, status, duration)


def _show(value) -> str:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, tuple):
        return "(" + ", ".join(_show(v) for v in value) + ")"
    return str(value)


def cmd_reproduce(config: RunConfig, criteria=None):
    criteria = build_criteria(config.seed) if criteria is None else criteria
    results = [run_criterion(c, skip_slow=config.skip_slow) for c in criteria]
    failed = [r for r in results if r.failed]
    data = {
        "criteria": [
            {
                "name": r.name,
                "expected": _show(r.expected),
                "computed": _show(r.computed) if r.status != "SKIP" else None,
                "status": r.status,
                "duration_ms": round(r.duration_ms, 1),
            }
            for r in results
        ],
        "passed": sum(r.status == "PASS" for r in results),
        "failed": len(failed),
        "skipped": sum(r.status == "SKIP" for r in results),
    }
    return (1 if failed else 0), data
