"""
Fractional chromatic number

Includes:
- fractional_chromatic: exact optimum of the covering LP over maximal independent sets,
  with the n/alpha shortcut for vertex-transitive constructions
- check_witness: independent verification of a FractionalWitness
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Optional

from mylogger import Logger

from gyrochromatic import settings
from gyrochromatic.exceptions import InvariantViolation
from gyrochromatic.graphs.models import Graph, bits_to_list, iter_bits, list_to_bits
from gyrochromatic.invariants.independence import (
    independence_number,
    is_independent,
    max_weight_independent_set,
    maximal_independent_masks,
)
from gyrochromatic.invariants.models import FractionalWitness
from gyrochromatic.invariants.simplex import ExactSimplex

logger = Logger()


def check_witness(g: Graph, witness: FractionalWitness) -> bool:
    """ Primal covers, dual packs, and both totals equal the claimed value """
    if len(witness.dual) != g.n:
        return False
    if any(not is_independent(g, members) for members, _ in witness.primal):
        return False
    if any(w < 0 for _, w in witness.primal) or any(y < 0 for y in witness.dual):
        return False
    if any(c < 1 for c in witness.coverage(g.n)):
        return False
    if witness.primal_total != witness.value or witness.dual_total != witness.value:
        return False
    if len(set(witness.dual)) == 1:
        heaviest = independence_number(g)[0] * witness.dual[0]
    else:
        heaviest, _ = max_weight_independent_set(g, witness.dual)
    return heaviest <= 1


def _orbit(g: Graph, start: int, cap: int) -> Optional[list[int]]:
    """ Closure of one vertex set under g.symmetries, or None past cap """
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for mask in frontier:
            for perm in g.symmetries:
                image = list_to_bits(perm[v] for v in iter_bits(mask))
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
                    if len(seen) > cap:
                        return None
        frontier = nxt
    return sorted(seen, key=bits_to_list)


def _transitive_witness(g: Graph, orbit_cap: int) -> Optional[FractionalWitness]:
    alpha, witness_set = independence_number(g)
    orbit = _orbit(g, list_to_bits(witness_set), orbit_cap)
    if orbit is None:
        logger.warning(f"orbit of a maximum independent set of {g} exceeds {orbit_cap}, using the LP")
        return None
    weight = Fraction(g.n, len(orbit) * alpha)
    candidate = FractionalWitness(
        value=Fraction(g.n, alpha),
        primal=tuple((bits_to_list(mask), weight) for mask in orbit),
        dual=(Fraction(1, alpha),) * g.n,
        method="vertex-transitive",
    )
    if not check_witness(g, candidate):
        logger.warning(f"vertex-transitive witness for {g} failed verification, using the LP")
        return None
    return candidate


def _lp_witness(g: Graph, column_cap: int) -> FractionalWitness:
    columns = maximal_independent_masks(g, column_cap)
    k = len(columns)
    costs = [1] * k + [0] * g.n
    rows = []
    for v in range(g.n):
        row = [1 if mask >> v & 1 else 0 for mask in columns]
        surplus = [0] * g.n
        surplus[v] = -1
        rows.append(row + surplus)
    solution = ExactSimplex(costs, rows, [1] * g.n).solve()
    witness = FractionalWitness(
        value=solution.objective,
        primal=tuple((bits_to_list(columns[j]), solution.x[j]) for j in range(k) if solution.x[j]),
        dual=solution.y,
    )
    logger.debug(f"LP over {k} maximal independent sets of {g}: {solution.pivots} pivots")
    return witness


def fractional_chromatic(g: Graph, column_cap: Optional[int] = None, orbit_cap: Optional[int] = None) -> FractionalWitness:
    """
    chi_f(G) with a primal/dual certificate.

    Graphs built by vertex-transitive constructors take the n/alpha value
    from the orbit of one maximum independent set; the witness is verified
    and the LP is used whenever verification fails.
    """
    column_cap = settings.COLUMN_CAP if column_cap is None else column_cap
    orbit_cap = settings.ORBIT_CAP if orbit_cap is None else orbit_cap
    return _fractional(g, column_cap, orbit_cap)


@lru_cache(maxsize=256)
def _fractional(g: Graph, column_cap: int, orbit_cap: int) -> FractionalWitness:
    witness = None
    if g.vt and g.edge_count:
        witness = _transitive_witness(g, orbit_cap)
    if witness is None:
        witness = _lp_witness(g, column_cap)
        if not check_witness(g, witness):
            raise InvariantViolation(f"LP witness for {g} failed its own check")
    logger.info(f"chi_f({g}) = {witness.value} [{witness.method}]")
    return witness
