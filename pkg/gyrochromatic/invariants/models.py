"""
Domain types for the invariants app

Includes:
- FractionalWitness: primal/dual optimality certificate of the fractional chromatic LP
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class FractionalWitness:
    """
    value = chi_f(G), certified by
    - primal: (independent set, weight) pairs covering every vertex with weight >= 1
    - dual: one weight per vertex, at most 1 on every independent set
    Both totals equal value.
    """
    value: Fraction
    primal: tuple
    dual: tuple
    method: str = "lp"

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        primal = tuple(sorted((tuple(sorted(s)), Fraction(w)) for s, w in self.primal if w))
        object.__setattr__(self, "primal", primal)
        object.__setattr__(self, "dual", tuple(Fraction(y) for y in self.dual))

    @property
    def primal_total(self) -> Fraction:
        return sum((w for _, w in self.primal), Fraction(0))

    @property
    def dual_total(self) -> Fraction:
        return sum(self.dual, Fraction(0))

    def coverage(self, n: int) -> list:
        """ Total primal weight on each vertex """
        covered = [Fraction(0)] * n
        for members, weight in self.primal:
            for v in members:
                covered[v] += weight
        return covered
