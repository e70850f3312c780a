"""
Chromatic and circular chromatic numbers

Both are found by asking find_homomorphism for maps into K_k or K_{p/q}
in ascending order, starting from the best cheap lower bound. Results are
memoised per graph, so bounds and reports can ask again for free.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from mylogger import Logger

from gyrochromatic.graphs.generators import circular_clique, complete
from gyrochromatic.graphs.homomorphism import find_homomorphism, search_order
from gyrochromatic.graphs.models import Graph
from gyrochromatic.invariants.independence import greedy_coloring, independence_number, maximum_clique

logger = Logger()


def chromatic_number(g: Graph) -> tuple[int, list[int]]:
    """ (chi(G), a proper coloring with colors 0..chi-1) """
    value, coloring = _chromatic(g)
    return value, list(coloring)


def circular_chromatic(g: Graph) -> tuple[Fraction, list[int]]:
    """ (chi_c(G) = p/q, a homomorphism G -> K_{p/q}) """
    value, hom = _circular(g)
    return value, list(hom)


@lru_cache(maxsize=256)
def _chromatic(g: Graph) -> tuple[int, tuple[int, ...]]:
    if not g.edge_count:
        return 1, (0,) * g.n
    greedy = greedy_coloring(g)
    upper = max(greedy) + 1
    clique = maximum_clique(g)
    alpha, _ = independence_number(g)
    # a maximum clique takes colors 0..omega-1 up to renaming
    fixed = {v: i for i, v in enumerate(clique)}
    for k in range(max(len(clique), -(-g.n // alpha)), upper):
        coloring = find_homomorphism(g, complete(k), fixed=fixed, interchangeable=True)
        if coloring is not None:
            return k, tuple(coloring)
    return upper, tuple(greedy)


def _candidate_fractions(n: int, lower: Fraction, chi: int) -> list[Fraction]:
    values = set()
    for p in range(2, n + 1):
        for q in range(1, p // 2 + 1):
            value = Fraction(p, q)
            if lower <= value < chi and value > chi - 1:
                values.add(value)
    return sorted(values)


@lru_cache(maxsize=256)
def _circular(g: Graph) -> tuple[Fraction, tuple[int, ...]]:
    if not g.edge_count:
        return Fraction(1), (0,) * g.n
    chi, coloring = _chromatic(g)
    alpha, _ = independence_number(g)
    lower = max(Fraction(len(maximum_clique(g))), Fraction(g.n, alpha))
    v0 = search_order(g)[0]
    for value in _candidate_fractions(g.n, lower, chi):
        target = circular_clique(value.numerator, value.denominator)
        hom = find_homomorphism(g, target, fixed={v0: 0})
        if hom is not None:
            logger.debug(f"chi_c({g}) = {value}")
            return value, tuple(hom)
    return Fraction(chi), coloring
