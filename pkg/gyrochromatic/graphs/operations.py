"""
Graph operations

Includes:
- cartesian, lexicographic: products (vertex (v, v') has index v * |H| + v')
- disjoint_union, identify: gluing two graphs
- complement, line_graph: derived graphs
- induced_subgraph, components: used when the union provenance is unknown
"""

from __future__ import annotations

from gyrochromatic.exceptions import ValidationError
from gyrochromatic.graphs.models import Graph, bits_to_list, iter_bits


def _pair_names(g: Graph, h: Graph) -> tuple:
    return tuple((v, w) for v in range(g.n) for w in range(h.n))


def _lift_symmetries(g: Graph, h: Graph) -> tuple:
    """ Lift generators of Aut(G) and Aut(H) coordinate-wise to the product """
    nh = h.n
    lifted = []
    for perm in g.symmetries:
        lifted.append(tuple(perm[v] * nh + w for v in range(g.n) for w in range(nh)))
    for perm in h.symmetries:
        lifted.append(tuple(v * nh + perm[w] for v in range(g.n) for w in range(nh)))
    return tuple(lifted)


def _product(g: Graph, h: Graph, rows: list, label: str) -> Graph:
    vt = g.vt and h.vt
    return Graph(g.n * h.n, tuple(rows), vt=vt, label=label,
                 symmetries=_lift_symmetries(g, h) if vt else (), names=_pair_names(g, h))


# ----------------------- PRODUCTS -----------------------

def cartesian(g: Graph, h: Graph) -> Graph:
    """ G □ H: (v,v') ~ (w,w') iff v = w and v'w' in E(H), or v' = w' and vw in E(G) """
    nh = h.n
    rows = []
    for v in range(g.n):
        for w in range(nh):
            row = h.adj[w] << (v * nh)
            for u in iter_bits(g.adj[v]):
                row |= 1 << (u * nh + w)
            rows.append(row)
    return _product(g, h, rows, f"cartesian({g},{h})")


def lexicographic(g: Graph, h: Graph) -> Graph:
    """ G[H]: (v,v') ~ (w,w') iff vw in E(G), or v = w and v'w' in E(H) """
    nh = h.n
    block = (1 << nh) - 1
    rows = []
    for v in range(g.n):
        outer = 0
        for u in iter_bits(g.adj[v]):
            outer |= block << (u * nh)
        for w in range(nh):
            rows.append(outer | h.adj[w] << (v * nh))
    return _product(g, h, rows, f"lex({g},{h})")


# ----------------------- GLUING -----------------------

def disjoint_union(g: Graph, h: Graph) -> Graph:
    """ G ∪ H with H's vertices shifted by |G|; remembers both operands """
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(rows), label=f"union({g},{h})", parts=(g, h))


def identify(g: Graph, u: int, h: Graph, v: int) -> Graph:
    """ Glue G and H by merging vertex u of G with vertex v of H (v takes u's index) """
    g.check_vertex(u)
    h.check_vertex(v)
    position = {}
    for w in range(h.n):
        if w == v:
            position[w] = u
        else:
            position[w] = g.n + (w if w < v else w - 1)
    n = g.n + h.n - 1
    rows = list(g.adj) + [0] * (h.n - 1)
    for a, b in h.edges:
        pa, pb = position[a], position[b]
        rows[pa] |= 1 << pb
        rows[pb] |= 1 << pa
    return Graph(n, tuple(rows), label=f"identify({g}:{u},{h}:{v})")


# ----------------------- DERIVED GRAPHS -----------------------

def complement(g: Graph) -> Graph:
    full = g.full_mask
    rows = tuple(~row & full & ~(1 << v) for v, row in enumerate(g.adj))
    return Graph(g.n, rows, vt=g.vt, label=f"complement({g})", symmetries=g.symmetries if g.vt else ())


def line_graph(g: Graph) -> Graph:
    """ L(G): one vertex per edge of G (sorted edge list), adjacent iff the edges share an endpoint """
    edges = g.edges
    if not edges:
        raise ValidationError(f"line graph of edgeless graph {g} would have no vertices")
    incident = [0] * g.n
    for i, (a, b) in enumerate(edges):
        incident[a] |= 1 << i
        incident[b] |= 1 << i
    rows = tuple((incident[a] | incident[b]) & ~(1 << i) for i, (a, b) in enumerate(edges))
    return Graph(len(edges), rows, label=f"line({g})", names=edges)


def induced_subgraph(g: Graph, vertices) -> Graph:
    keep = sorted(set(g.check_vertex(v) for v in vertices))
    if not keep:
        raise ValidationError("induced subgraph needs at least one vertex")
    position = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for w in iter_bits(g.adj[v]):
            if w in position:
                row |= 1 << position[w]
        rows.append(row)
    return Graph(len(keep), tuple(rows), label=f"induced({g})", names=tuple(keep))


def components(g: Graph) -> list[list[int]]:
    """ Connected components as sorted vertex lists, ordered by smallest vertex """
    seen = 0
    result = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        frontier = comp = 1 << start
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= g.adj[v]
            frontier = reach & ~comp
            comp |= frontier
        seen |= comp
        result.append(bits_to_list(comp))
    return result
