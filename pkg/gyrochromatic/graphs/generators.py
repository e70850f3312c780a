"""
Graph constructors

Includes:
- make_graph: graph from an explicit edge list
- complete, cycle, circular_clique: circular cliques K_{p/q} and their special cases
- kneser, petersen: Kneser graphs on k-subsets in colex order
- cayley, circulant, hamming_cayley, g5: Cayley graphs of finite abelian groups

Constructors that guarantee vertex-transitivity set vt and attach
generators of a transitive automorphism group.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from mylogger import Logger

from gyrochromatic.exceptions import ValidationError
from gyrochromatic.graphs.models import AbelianGroup, ConnectionSet, Graph

logger = Logger()


# ----------------------- EXPLICIT GRAPHS -----------------------

def make_graph(n: int, edges: Iterable, label: str = "") -> Graph:
    """ Build a simple graph on n vertices; duplicate and reversed edges are merged """
    if not isinstance(n, int) or n < 1:
        raise ValidationError(f"vertex count must be a positive integer, got {n!r}")
    rows = [0] * n
    for pair in edges:
        u, v = pair
        for w in (u, v):
            if not isinstance(w, int) or not 0 <= w < n:
                raise ValidationError(f"edge endpoint {w} out of range [0,{n})")
        if u == v:
            raise ValidationError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows), label=label or f"graph({n})")


def _rotation(p: int) -> tuple:
    return tuple((i + 1) % p for i in range(p))


def complete(n: int) -> Graph:
    """ K_n """
    if n == 1:
        return Graph(1, (0,), vt=True, label="K1", symmetries=((0,),))
    graph = circular_clique(n, 1)
    return Graph(graph.n, graph.adj, vt=True, label=f"K{n}", symmetries=graph.symmetries)


def circular_clique(p: int, q: int) -> Graph:
    """ K_{p/q}: vertices 0..p-1, i ~ j iff q <= |i-j| <= p-q """
    if q < 1 or p < 2 * q:
        raise ValidationError(f"circular clique needs p >= 2q >= 2, got p={p}, q={q}")
    rows = []
    for i in range(p):
        row = 0
        for j in range(p):
            if q <= abs(i - j) <= p - q:
                row |= 1 << j
        rows.append(row)
    return Graph(p, tuple(rows), vt=True, label=f"circclique:{p},{q}", symmetries=(_rotation(p),))


# ----------------------- KNESER GRAPHS -----------------------

def kneser(n: int, k: int) -> Graph:
    """ K(n,k): k-subsets of {0..n-1} in colex order, adjacent iff disjoint """
    if k < 1 or n < 2 * k:
        raise ValidationError(f"Kneser graph needs n >= 2k >= 2, got n={n}, k={k}")
    subsets = sorted(itertools.combinations(range(n), k), key=lambda s: s[::-1])
    position = {s: i for i, s in enumerate(subsets)}
    masks = [sum(1 << x for x in s) for s in subsets]
    rows = []
    for a in masks:
        row = 0
        for j, b in enumerate(masks):
            if not a & b:
                row |= 1 << j
        rows.append(row)

    # a transposition and an n-cycle of the ground set generate S_n
    ground_perms = [tuple(range(n))]
    if n > 1:
        ground_perms = [(1, 0) + tuple(range(2, n)), tuple((x + 1) % n for x in range(n))]
    symmetries = tuple(
        tuple(position[tuple(sorted(perm[x] for x in s))] for s in subsets)
        for perm in ground_perms
    )
    logger.debug(f"K({n},{k}): {len(subsets)} vertices")
    return Graph(len(subsets), tuple(rows), vt=True, label=f"kneser:{n},{k}",
                 symmetries=symmetries, names=tuple(subsets))


def petersen() -> Graph:
    return kneser(5, 2)


# ----------------------- CAYLEY GRAPHS -----------------------

def cayley(group: AbelianGroup, connection: ConnectionSet, label: str = "") -> Graph:
    """ C(Z,S): x ~ y iff y - x in S; vertices in mixed-radix order """
    if connection.group != group:
        raise ValidationError(f"connection set lives in Z_{connection.group}, not Z_{group}")
    table = group.add_table
    s_indices = [group.index(s) for s in connection.sorted()]
    rows = []
    for i in range(group.order):
        row = 0
        for s in s_indices:
            row |= 1 << table[i][s]
        rows.append(row)
    # translations by the unit vectors generate the whole group
    symmetries = []
    for axis in range(group.rank):
        unit = tuple(1 if i == axis else 0 for i in range(group.rank))
        symmetries.append(table[group.index(unit)])
    return Graph(group.order, tuple(rows), vt=True,
                 label=label or f"cayley:{group}:{len(connection)}",
                 symmetries=tuple(symmetries), cayley=connection, names=group.elements)


def circulant(modulus: int, residues) -> Graph:
    """ C(N,S) over Z_N """
    if isinstance(residues, ConnectionSet):
        connection = residues
    else:
        connection = ConnectionSet.cyclic(modulus, residues)
    label = f"circulant:{modulus}:" + ",".join(str(x[0]) for x in connection.sorted())
    return cayley(AbelianGroup((modulus,)), connection, label=label)


def cycle(n: int) -> Graph:
    """ C_n as the circulant C(n, {1, n-1}) """
    if n < 3:
        raise ValidationError(f"cycles need at least 3 vertices, got {n}")
    graph = circulant(n, {1, n - 1})
    return Graph(graph.n, graph.adj, vt=True, label=f"C{n}", symmetries=graph.symmetries,
                 cayley=graph.cayley, names=graph.names)


def hamming_cayley(n: int, d: int) -> Graph:
    """ C(Z_2^n, {x : x has exactly d ones}) """
    if not 1 <= d <= n:
        raise ValidationError(f"weight must satisfy 1 <= d <= n, got n={n}, d={d}")
    group = AbelianGroup((2,) * n)
    elements = frozenset(x for x in group.elements if sum(x) == d)
    return cayley(group, ConnectionSet(group, elements), label=f"hamming:{n},{d}")


def g5_connection_set() -> ConnectionSet:
    """ Z_5^2 minus {-1,0,1}^2 """
    group = AbelianGroup((5, 5))
    near = {0, 1, 4}
    return ConnectionSet(group, frozenset(x for x in group.elements if not (x[0] in near and x[1] in near)))


def g5() -> Graph:
    connection = g5_connection_set()
    return cayley(connection.group, connection, label="g5")
