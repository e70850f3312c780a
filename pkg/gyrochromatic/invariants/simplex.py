"""
Exact rational simplex

Two-phase primal simplex over fractions.Fraction for

    minimise c.x  subject to  A x = b,  x >= 0,  b >= 0

Bland's rule (smallest improving column, smallest leaving basis index)
rules out cycling. The solution carries the dual values y = c_B B^-1,
read off the reduced costs of the phase-1 artificial columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mylogger import Logger

from gyrochromatic.exceptions import ValidationError

logger = Logger()


@dataclass(frozen=True)
class LPSolution:
    objective: Fraction
    x: tuple
    y: tuple
    pivots: int


class ExactSimplex:
    """ Dense tableau simplex; rows of the tableau are lists of Fractions """

    def __init__(self, costs, rows, rhs):
        if len(rows) != len(rhs):
            raise ValidationError(f"{len(rows)} constraint rows but {len(rhs)} right-hand sides")
        width = len(costs)
        for i, row in enumerate(rows):
            if len(row) != width:
                raise ValidationError(f"row {i} has {len(row)} coefficients, expected {width}", location=f"row {i}")
        if any(Fraction(b) < 0 for b in rhs):
            raise ValidationError("right-hand sides must be non-negative")
        self.costs = [Fraction(c) for c in costs]
        self.rows = [[Fraction(a) for a in row] for row in rows]
        self.rhs = [Fraction(b) for b in rhs]
        self.pivots = 0

    def _pivot(self, tableau, reduced, r, s):
        self.pivots += 1
        pivot_row = tableau[r]
        inverse = 1 / pivot_row[s]
        pivot_row[:] = [a * inverse for a in pivot_row]
        for k, row in enumerate(tableau):
            if k != r and row[s]:
                factor = row[s]
                row[:] = [a - factor * b for a, b in zip(row, pivot_row)]
        if reduced is not None and reduced[s]:
            factor = reduced[s]
            reduced[:] = [a - factor * b for a, b in zip(reduced, pivot_row)]

    def _optimise(self, tableau, basis, cost, allowed):
        """ Run Bland pivots on columns < allowed; returns the final reduced-cost row """
        width = len(tableau[0]) - 1
        reduced = list(cost) + [Fraction(0)]
        for i, row in enumerate(tableau):
            cb = cost[basis[i]]
            if cb:
                reduced = [a - cb * b for a, b in zip(reduced, row)]
        while True:
            entering = next((j for j in range(min(allowed, width)) if reduced[j] < 0), None)
            if entering is None:
                return reduced
            leaving = None
            best_ratio = None
            for i, row in enumerate(tableau):
                if row[entering] > 0:
                    ratio = row[-1] / row[entering]
                    if best_ratio is None or ratio < best_ratio or (ratio == best_ratio and basis[i] < basis[leaving]):
                        leaving, best_ratio = i, ratio
            if leaving is None:
                raise ValidationError("linear program is unbounded")
            self._pivot(tableau, reduced, leaving, entering)
            basis[leaving] = entering

    def solve(self) -> LPSolution:
        m, nv = len(self.rows), len(self.costs)
        one, zero = Fraction(1), Fraction(0)
        tableau = [
            row + [one if k == i else zero for k in range(m)] + [b]
            for i, (row, b) in enumerate(zip(self.rows, self.rhs))
        ]
        basis = [nv + i for i in range(m)]

        # phase 1: drive the artificial variables to zero
        phase_one = [zero] * nv + [one] * m
        reduced = self._optimise(tableau, basis, phase_one, allowed=nv + m)
        if reduced[-1] != 0:
            raise ValidationError(f"linear program is infeasible (phase-1 optimum {-reduced[-1]})")
        for i in range(m):
            if basis[i] >= nv:
                column = next((j for j in range(nv) if tableau[i][j] != 0), None)
                if column is not None:
                    self._pivot(tableau, None, i, column)
                    basis[i] = column
        logger.debug(f"phase 1 done after {self.pivots} pivots")

        # phase 2: original objective, artificial columns may not re-enter
        reduced = self._optimise(tableau, basis, self.costs + [zero] * m, allowed=nv)
        x = [zero] * nv
        for i, j in enumerate(basis):
            if j < nv:
                x[j] = tableau[i][-1]
        y = tuple(-reduced[nv + i] for i in range(m))
        objective = -reduced[-1]
        logger.debug(f"LP {m}x{nv}: optimum {objective} after {self.pivots} pivots")
        return LPSolution(objective=objective, x=tuple(x), y=y, pivots=self.pivots)
