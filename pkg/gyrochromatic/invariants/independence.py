"""
Independent sets and cliques

Includes:
- independence_number / clique_number: bitset branch and bound with a greedy-coloring bound
- enumerate_maximum_independent_sets: every independent set of size alpha(G)
- enumerate_maximal_independent_sets: pivoting Bron-Kerbosch on the complement, capped
- max_weight_independent_set: exact rational weights (dual checks of the LP)
- greedy_coloring: largest-degree-first proper coloring
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from mylogger import Logger

from gyrochromatic.exceptions import BudgetExceeded
from gyrochromatic.graphs.models import Graph, bits_to_list, iter_bits

logger = Logger()


def _complement_rows(g: Graph) -> list[int]:
    full = g.full_mask
    return [~row & full & ~(1 << v) for v, row in enumerate(g.adj)]


def _color_order(candidates: int, conflict: list[int]) -> list[tuple[int, int]]:
    """
    Greedily partition `candidates` into classes that are independent in the
    clique graph (`conflict[v]` holds the non-neighbours of v) and return
    (vertex, class number) pairs in ascending class order. The class number of
    a vertex bounds how many vertices a clique can take from it and the
    vertices listed before it.
    """
    order = []
    remaining = candidates
    color = 0
    while remaining:
        color += 1
        available = remaining
        while available:
            low = available & -available
            v = low.bit_length() - 1
            order.append((v, color))
            remaining ^= low
            available &= conflict[v] & ~low
    return order


def _clique_search(rows: list[int], n: int, target: int = 0, collect: bool = False):
    """
    Maximum clique of the graph with adjacency `rows` (MCQ-style).

    With collect=True every clique of size exactly `target` is returned
    (target must be the clique number); otherwise the first maximum clique.
    """
    conflict = [~row & ((1 << n) - 1) for row in rows]  # non-neighbours, including the vertex itself
    best = [[]]
    found = []
    nodes = 0

    def expand(chosen: list[int], candidates: int):
        nonlocal nodes
        nodes += 1
        order = _color_order(candidates, conflict)
        for v, color in reversed(order):
            if collect:
                if len(chosen) + color < target:
                    return
            elif len(chosen) + color <= len(best[0]):
                return
            chosen.append(v)
            narrowed = candidates & rows[v]
            if narrowed:
                expand(chosen, narrowed)
            elif collect:
                if len(chosen) == target:
                    found.append(sorted(chosen))
            elif len(chosen) > len(best[0]):
                best[0] = list(chosen)
            chosen.pop()
            candidates &= ~(1 << v)

    expand([], (1 << n) - 1)
    logger.debug(f"clique search on {n} vertices: {nodes} nodes")
    return found if collect else sorted(best[0])


# ----------------------- INDEPENDENCE / CLIQUES -----------------------

@lru_cache(maxsize=256)
def _maximum_independent_set(g: Graph) -> tuple[int, ...]:
    return tuple(_clique_search(_complement_rows(g), g.n))


@lru_cache(maxsize=256)
def _maximum_clique(g: Graph) -> tuple[int, ...]:
    return tuple(_clique_search(list(g.adj), g.n))


def independence_number(g: Graph) -> tuple[int, list[int]]:
    """ (alpha(G), a maximum independent set) """
    witness = list(_maximum_independent_set(g))
    return len(witness), witness


def clique_number(g: Graph) -> int:
    """ omega(G), computed as alpha of the complement """
    return len(_maximum_clique(g))


def maximum_clique(g: Graph) -> list[int]:
    return list(_maximum_clique(g))


def enumerate_maximum_independent_sets(g: Graph) -> list[list[int]]:
    """ All independent sets of size alpha(G), sorted lexicographically """
    alpha, _ = independence_number(g)
    sets = _clique_search(_complement_rows(g), g.n, target=alpha, collect=True)
    return sorted(sets)


def maximal_independent_masks(g: Graph, cap: int) -> list[int]:
    """ Bitmasks of all inclusion-maximal independent sets; BudgetExceeded past cap """
    rows = _complement_rows(g)
    found = []

    def bron_kerbosch(chosen: int, candidates: int, excluded: int):
        if not candidates and not excluded:
            found.append(chosen)
            if len(found) > cap:
                raise BudgetExceeded("too many maximal independent sets", limit=cap, partial=len(found))
            return
        pool = candidates | excluded
        pivot = max(iter_bits(pool), key=lambda u: ((candidates & rows[u]).bit_count(), -u))
        for v in iter_bits(candidates & ~rows[pivot]):
            bron_kerbosch(chosen | 1 << v, candidates & rows[v], excluded & rows[v])
            candidates &= ~(1 << v)
            excluded |= 1 << v

    bron_kerbosch(0, g.full_mask, 0)
    return sorted(found, key=lambda m: bits_to_list(m))


def enumerate_maximal_independent_sets(g: Graph, cap: int) -> list[list[int]]:
    """ All inclusion-maximal independent sets, sorted lexicographically """
    return [bits_to_list(mask) for mask in maximal_independent_masks(g, cap)]


def is_independent(g: Graph, vertices) -> bool:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return all(not g.adj[v] & mask for v in iter_bits(mask))


# ----------------------- WEIGHTED / COLORING -----------------------

def max_weight_independent_set(g: Graph, weights) -> tuple[Fraction, list[int]]:
    """ Exact maximum-weight independent set for non-negative rational weights """
    weights = [Fraction(w) for w in weights]
    best_value = Fraction(0)
    best_set: list[int] = []
    rows = list(g.adj)

    def bound(candidates: int) -> Fraction:
        # every clique contributes at most its heaviest vertex
        total = Fraction(0)
        remaining = candidates
        while remaining:
            low = remaining & -remaining
            v = low.bit_length() - 1
            heaviest = weights[v]
            remaining ^= low
            clique_mask = rows[v] & remaining
            while clique_mask:
                low2 = clique_mask & -clique_mask
                u = low2.bit_length() - 1
                heaviest = max(heaviest, weights[u])
                remaining ^= low2
                clique_mask &= rows[u]
            total += heaviest
        return total

    def search(chosen: list[int], value: Fraction, candidates: int):
        nonlocal best_value, best_set
        if value > best_value:
            best_value, best_set = value, sorted(chosen)
        if not candidates or value + bound(candidates) <= best_value:
            return
        v = max(iter_bits(candidates), key=lambda u: (weights[u], -u))
        chosen.append(v)
        search(chosen, value + weights[v], candidates & ~rows[v] & ~(1 << v))
        chosen.pop()
        search(chosen, value, candidates & ~(1 << v))

    search([], Fraction(0), g.full_mask)
    return best_value, best_set


def greedy_coloring(g: Graph) -> list[int]:
    """ Largest-degree-first greedy coloring with colors 0, 1, ... """
    colors = [-1] * g.n
    for v in sorted(range(g.n), key=lambda u: (-g.degree(u), u)):
        used = {colors[u] for u in g.neighbors(v) if colors[u] >= 0}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return colors
