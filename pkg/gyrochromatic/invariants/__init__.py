from gyrochromatic.invariants.coloring import chromatic_number, circular_chromatic
from gyrochromatic.invariants.fractional import check_witness, fractional_chromatic
from gyrochromatic.invariants.independence import (
    clique_number,
    enumerate_maximal_independent_sets,
    enumerate_maximum_independent_sets,
    greedy_coloring,
    independence_number,
    is_independent,
    max_weight_independent_set,
    maximal_independent_masks,
    maximum_clique,
)
from gyrochromatic.invariants.models import FractionalWitness
from gyrochromatic.invariants.simplex import ExactSimplex, LPSolution

__all__ = [
    "ExactSimplex",
    "FractionalWitness",
    "LPSolution",
    "check_witness",
    "chromatic_number",
    "circular_chromatic",
    "clique_number",
    "enumerate_maximal_independent_sets",
    "enumerate_maximum_independent_sets",
    "fractional_chromatic",
    "greedy_coloring",
    "independence_number",
    "is_independent",
    "max_weight_independent_set",
    "maximal_independent_masks",
    "maximum_clique",
]
