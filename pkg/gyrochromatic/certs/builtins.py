"""
Built-in certificates

Includes:
- figure1_graph / figure1_certificate: a 40/7-gyrocoloring of K5 ∪ K2[C5]
- prop62_certificate: the density 4/25 base of G_5 over Z_5 x Z_5
- builtin_seeds: the built-in bases that apply to a given graph
"""

from __future__ import annotations

from fractions import Fraction

from gyrochromatic.certs.conversions import discretize
from gyrochromatic.certs.models import ContinuousGyrocoloring
from gyrochromatic.graphs import complete, cycle, disjoint_union, g5, lexicographic
from gyrochromatic.graphs.models import AbelianGroup, Graph
from gyrochromatic.gyro import BaseCertificate

# Cycle position p of each C5 copy takes shift index 3p mod 5
FIGURE1_ASSIGNMENT = 3


def figure1_graph() -> Graph:
    """ K5 on vertices 0..4, then K2[C5] with copy k, position p at 5 + 5k + p """
    return disjoint_union(complete(5), lexicographic(complete(2), cycle(5)))


def figure1_certificate(assignment: int = FIGURE1_ASSIGNMENT) -> ContinuousGyrocoloring:
    """ z = 40/7, base [0,1/2) ∪ [15/14,22/14), K5 shifts 0, 1/2, 29/14, 36/14, 58/14 """
    base = ((Fraction(0), Fraction(1, 2)), (Fraction(15, 14), Fraction(22, 14)))
    clique_shifts = [Fraction(0), Fraction(1, 2), Fraction(29, 14), Fraction(36, 14), Fraction(58, 14)]
    copy_shifts = []
    for copy in range(2):
        for position in range(5):
            i = assignment * position % 5
            copy_shifts.append(Fraction(8 * i + 4 * copy, 7))
    return ContinuousGyrocoloring(Fraction(40, 7), base, tuple(clique_shifts + copy_shifts))


def prop62_certificate() -> BaseCertificate:
    """ A = {(0,0),(0,1),(1,0),(1,1)}, f = identity on Z_5^2 """
    group = AbelianGroup((5, 5))
    return BaseCertificate(group, [(0, 0), (0, 1), (1, 0), (1, 1)], group.elements, graph_label="g5")


def builtin_seeds(g: Graph) -> list[BaseCertificate]:
    seeds = []
    if g == figure1_graph():
        seeds.append(discretize(figure1_certificate(), label=g.label))
    if g == g5():
        seeds.append(prop62_certificate().relabel(g.label))
    return seeds
