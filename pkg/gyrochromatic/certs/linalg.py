"""
Exact integer linear algebra

Includes:
- bareiss_determinant: fraction-free Gaussian elimination
- lemma63_matrix / lemma63_matrix_check: the 25 x 25 incidence matrix of the
  translates I_v = {v, v+(0,1), v+(1,0), v+(1,1)} of Z_5^2
"""

from __future__ import annotations

from gyrochromatic.exceptions import ValidationError
from gyrochromatic.graphs.models import AbelianGroup


def bareiss_determinant(matrix) -> int:
    """ Determinant of a square integer matrix; every intermediate division is exact """
    rows = [[int(x) for x in row] for row in matrix]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValidationError("determinant needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    previous = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if swap is None:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) // previous
            rows[i][k] = 0
        previous = pivot
    return sign * rows[n - 1][n - 1]


def translate_block(v: tuple) -> set:
    """ I_v = {v, v+(0,1), v+(1,0), v+(1,1)} in Z_5^2 """
    group = AbelianGroup((5, 5))
    return {group.add(v, d) for d in ((0, 0), (0, 1), (1, 0), (1, 1))}


def lemma63_matrix() -> list[list[int]]:
    """ M[x][y] = 1 iff x lies in I_y, rows and columns in group order """
    elements = AbelianGroup((5, 5)).elements
    blocks = [translate_block(y) for y in elements]
    return [[1 if x in block else 0 for block in blocks] for x in elements]


def lemma63_matrix_check() -> tuple[int, bool]:
    det = bareiss_determinant(lemma63_matrix())
    return det, det != 0
