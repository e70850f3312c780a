"""
Domain types for the graphs app

Includes:
- Graph: finite simple graph stored as adjacency bit rows (Python ints)
- AbelianGroup: Z_{m1} x ... x Z_{md} with mixed-radix element indexing
- GroupElement: residue vector of an AbelianGroup
- ConnectionSet: symmetric subset of a group avoiding the identity
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from gyrochromatic.exceptions import ValidationError


GroupElement = tuple  # residues, one per cyclic factor

# Automorphism lists longer than this are truncated to the identity
AUTOMORPHISM_LIMIT = 50_000


def iter_bits(mask: int):
    """ Yield the indices of the set bits of mask in ascending order """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def list_to_bits(items: Iterable[int]) -> int:
    mask = 0
    for i in items:
        mask |= 1 << i
    return mask


# ----------------------- GROUPS -----------------------

@dataclass(frozen=True)
class AbelianGroup:
    """ Finite abelian group Z_{m1} x ... x Z_{md} """
    moduli: tuple

    def __post_init__(self):
        moduli = tuple(int(m) for m in self.moduli)
        if not moduli:
            raise ValidationError("a group needs at least one cyclic factor")
        if any(m < 2 for m in moduli):
            raise ValidationError(f"moduli must be at least 2, got {list(moduli)}")
        object.__setattr__(self, "moduli", moduli)

    @classmethod
    def parse(cls, spec: str) -> "AbelianGroup":
        """ Build a group from '12' or '5x5' """
        try:
            return cls(tuple(int(part) for part in str(spec).lower().split("x")))
        except ValueError:
            raise ValidationError(f"malformed group spec {spec!r}, expected 'N' or 'm1xm2x...'")

    def __str__(self):
        return "x".join(str(m) for m in self.moduli)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @cached_property
    def order(self) -> int:
        return math.prod(self.moduli)

    @property
    def zero(self) -> GroupElement:
        return (0,) * self.rank

    @cached_property
    def elements(self) -> tuple:
        """ All elements in mixed-radix order (first coordinate most significant) """
        return tuple(itertools.product(*(range(m) for m in self.moduli)))

    @cached_property
    def _positions(self) -> dict:
        return {x: i for i, x in enumerate(self.elements)}

    def index(self, x: GroupElement) -> int:
        try:
            return self._positions[tuple(x)]
        except KeyError:
            raise ValidationError(f"{tuple(x)} is not a reduced element of Z_{self}")

    def element(self, i: int) -> GroupElement:
        return self.elements[i]

    def validate(self, x) -> GroupElement:
        x = tuple(x)
        if len(x) != self.rank:
            raise ValidationError(f"element {x} has {len(x)} residues, group Z_{self} needs {self.rank}")
        if any(not isinstance(r, int) or not 0 <= r < m for r, m in zip(x, self.moduli)):
            raise ValidationError(f"element {x} is not reduced modulo {list(self.moduli)}")
        return x

    def reduce(self, x) -> GroupElement:
        return tuple(int(r) % m for r, m in zip(x, self.moduli))

    def add(self, x, y) -> GroupElement:
        return tuple((a + b) % m for a, b, m in zip(x, y, self.moduli))

    def sub(self, x, y) -> GroupElement:
        return tuple((a - b) % m for a, b, m in zip(x, y, self.moduli))

    def neg(self, x) -> GroupElement:
        return tuple((-a) % m for a, m in zip(x, self.moduli))

    # Index-level tables used by the searches

    @cached_property
    def add_table(self) -> tuple:
        """ add_table[i][j] = index(element(i) + element(j)) """
        elems = self.elements
        return tuple(tuple(self.index(self.add(x, y)) for y in elems) for x in elems)

    @cached_property
    def neg_table(self) -> tuple:
        return tuple(self.index(self.neg(x)) for x in self.elements)

    @cached_property
    def automorphisms(self) -> tuple:
        """
        Index permutations of the automorphisms generated by coordinate-wise
        unit multiplication and permutations of factors with equal moduli.
        The identity comes first.
        """
        units = [[u for u in range(1, m) if math.gcd(u, m) == 1] for m in self.moduli]
        count = math.prod(len(u) for u in units)
        groups = {}
        for i, m in enumerate(self.moduli):
            groups.setdefault(m, []).append(i)
        for same in groups.values():
            count *= math.factorial(len(same))
        identity = tuple(range(self.order))
        if count > AUTOMORPHISM_LIMIT:
            return (identity,)

        # permutations of coordinates that only swap equal moduli
        coordinate_perms = [()]
        for i in range(self.rank):
            coordinate_perms = [
                p + (j,) for p in coordinate_perms
                for j in range(self.rank)
                if j not in p and self.moduli[j] == self.moduli[i]
            ]
        result = []
        for scales in itertools.product(*units):
            for perm in coordinate_perms:
                image = tuple(
                    self.index(tuple(scales[perm[i]] * x[perm[i]] % self.moduli[i] for i in range(self.rank)))
                    for x in self.elements
                )
                result.append(image)
        result.sort(key=lambda p: p != identity)
        return tuple(result)


@dataclass(frozen=True)
class ConnectionSet:
    """ S with S = -S and 0 not in S """
    group: AbelianGroup
    elements: frozenset

    def __post_init__(self):
        elems = frozenset(self.group.validate(x) for x in self.elements)
        if self.group.zero in elems:
            raise ValidationError("connection set must not contain the identity")
        for x in elems:
            if self.group.neg(x) not in elems:
                raise ValidationError(f"connection set is not symmetric: {x} present but {self.group.neg(x)} missing")
        object.__setattr__(self, "elements", elems)

    @classmethod
    def cyclic(cls, modulus: int, residues: Iterable[int]) -> "ConnectionSet":
        group = AbelianGroup((modulus,))
        elems = []
        for r in residues:
            if not 0 <= int(r) < modulus:
                raise ValidationError(f"residue {r} out of range for Z_{modulus}")
            elems.append((int(r),))
        return cls(group, frozenset(elems))

    def __len__(self):
        return len(self.elements)

    def sorted(self) -> list:
        return sorted(self.elements)

    @cached_property
    def mask(self) -> int:
        return list_to_bits(self.group.index(x) for x in self.elements)


# ----------------------- GRAPHS -----------------------

@dataclass(frozen=True)
class Graph:
    """
    Finite simple graph

    adj[v] is an int whose bit w is set iff vw is an edge.
    vt is only ever set by constructors that guarantee vertex-transitivity;
    symmetries then holds vertex permutations generating a transitive
    automorphism group. cayley records the (group, S) a Cayley graph was
    built from and parts the operands of a disjoint union.
    """
    n: int
    adj: tuple
    vt: bool = field(default=False, compare=False)
    label: str = field(default="", compare=False)
    symmetries: tuple = field(default=(), compare=False, repr=False)
    cayley: Optional[ConnectionSet] = field(default=None, compare=False, repr=False)
    parts: Optional[tuple] = field(default=None, compare=False, repr=False)
    names: Optional[tuple] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError("graphs must have at least one vertex")
        adj = tuple(int(row) for row in self.adj)
        if len(adj) != self.n:
            raise ValidationError(f"expected {self.n} adjacency rows, got {len(adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValidationError(f"row {v} has bits beyond width {self.n}")
            if row >> v & 1:
                raise ValidationError(f"self-loop at vertex {v}")
            for w in iter_bits(row):
                if not adj[w] >> v & 1:
                    raise ValidationError(f"adjacency not symmetric at ({v},{w})")
        object.__setattr__(self, "adj", adj)
        if self.vt and not self.symmetries:
            raise ValidationError("vertex-transitive graphs must carry their symmetries")

    def __str__(self):
        return self.label or f"graph(n={self.n}, m={self.edge_count})"

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def edges(self) -> tuple:
        """ Sorted (u, v) pairs with u < v """
        return tuple((v, w) for v in range(self.n) for w in iter_bits(self.adj[v] >> (v + 1) << (v + 1)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return bits_to_list(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def check_vertex(self, v) -> int:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise ValidationError(f"vertex {v} out of range [0,{self.n})")
        return v

    def to_networkx(self):
        """ networkx view of the graph (used for interop and independent checks) """
        import networkx as nx
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g
