"""
Graph homomorphism search

Includes:
- search_order: deterministic vertex order shared by every backtracking search
- find_homomorphism: backtracking G -> H with forward checking on bitset domains
- is_homomorphism: independent edge-preservation check
"""

from __future__ import annotations

from typing import Optional

from mylogger import Logger

from gyrochromatic.graphs.models import Graph, iter_bits

logger = Logger()


def search_order(g: Graph, first: Optional[list] = None) -> list[int]:
    """
    Vertex order for backtracking: the given vertices first, otherwise the
    highest-degree vertex; then repeatedly the vertex with the most already
    ordered neighbours (ties: higher degree, then smaller index).
    """
    order = list(first or [])
    if not order:
        order = [max(range(g.n), key=lambda v: (g.degree(v), -v))]
    placed = 0
    for v in order:
        placed |= 1 << v
    while len(order) < g.n:
        best = max(
            (v for v in range(g.n) if not placed >> v & 1),
            key=lambda v: ((g.adj[v] & placed).bit_count(), g.degree(v), -v),
        )
        order.append(best)
        placed |= 1 << best
    return order


def find_homomorphism(g: Graph, h: Graph, fixed: Optional[dict] = None,
                      interchangeable: bool = False) -> Optional[list[int]]:
    """
    Return a vertex map h: V(G) -> V(H) sending edges to edges, or None.

    Each step assigns the unassigned vertex with the fewest targets left
    (ties: higher degree, then smaller index) and strikes the non-neighbours
    of its image from the domains of its unassigned neighbours. Targets are
    tried in ascending order, so the result is deterministic.

    `fixed` pre-assigns some vertices (used to pin one vertex when H is
    vertex-transitive). With `interchangeable` (H complete) a step tries at
    most one target above the highest one used so far.
    """
    fixed = dict(fixed or {})
    for v, target in fixed.items():
        g.check_vertex(v)
        h.check_vertex(target)
    domains = [1 << fixed[v] if v in fixed else h.full_mask for v in range(g.n)]
    mapping = [-1] * g.n
    nodes = 0

    def extend(unassigned: int, domains: list, highest: int) -> bool:
        nonlocal nodes
        if not unassigned:
            return True
        nodes += 1
        v = min(iter_bits(unassigned), key=lambda u: (domains[u].bit_count(), -g.degree(u), u))
        rest = unassigned & ~(1 << v)
        candidates = domains[v]
        if interchangeable:
            candidates &= (1 << (highest + 2)) - 1
        for target in iter_bits(candidates):
            narrowed = list(domains)
            for u in iter_bits(g.adj[v] & rest):
                narrowed[u] &= h.adj[target]
                if not narrowed[u]:
                    break
            else:
                mapping[v] = target
                if extend(rest, narrowed, max(highest, target)):
                    return True
        mapping[v] = -1
        return False

    found = extend(g.full_mask, domains, max(fixed.values(), default=-1))
    logger.debug(f"{g} -> {h}: {'found' if found else 'none'} after {nodes} nodes")
    if not found:
        return None
    return mapping


def is_homomorphism(g: Graph, h: Graph, mapping) -> bool:
    """ True iff mapping is total on V(G), lands in V(H) and preserves every edge """
    if mapping is None or len(mapping) != g.n:
        return False
    if any(not isinstance(t, int) or not 0 <= t < h.n for t in mapping):
        return False
    return all(h.has_edge(mapping[u], mapping[v]) for u, v in g.edges)
