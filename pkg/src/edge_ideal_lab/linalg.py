"""Exact integer/rational linear algebra: matrix rank and LP feasibility.

No floating point anywhere: rank uses fraction-free (Bareiss) elimination
over the integers, and feasibility uses a phase-one simplex over Fraction
with Bland's rule for guaranteed termination.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of an integer matrix, by Bareiss elimination."""
    m = [[int(v) for v in row] for row in rows]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev_pivot = 1
    row = 0
    for col in range(n_cols):
        pivot_row = next((r for r in range(row, n_rows) if m[r][col] != 0), None)
        if pivot_row is None:
            continue
        m[row], m[pivot_row] = m[pivot_row], m[row]
        pivot = m[row][col]
        for r in range(row + 1, n_rows):
            for c in range(col + 1, n_cols):
                m[r][c] = (pivot * m[r][c] - m[r][col] * m[row][c]) // prev_pivot
            m[r][col] = 0
        prev_pivot = pivot
        rank += 1
        row += 1
        if row == n_rows:
            break
    return rank


def feasible_nonneg(
    a_le: Sequence[Sequence[int]],
    b_le: Sequence[int],
    a_eq: Sequence[Sequence[int]],
    b_eq: Sequence[int],
) -> bool:
    """Whether {x >= 0 : a_le x <= b_le, a_eq x = b_eq} is non-empty.

    Requires b_le >= 0 and b_eq >= 0 (all uses here satisfy this), so slacks
    give a starting basis for the inequality rows and one artificial variable
    per equality row. Phase one minimizes the artificial sum; Bland's rule
    guarantees termination.
    """
    if any(b < 0 for b in b_le) or any(b < 0 for b in b_eq):
        raise ValueError("right-hand sides must be non-negative")
    n = len(a_le[0]) if a_le else (len(a_eq[0]) if a_eq else 0)
    n_le, n_eq = len(a_le), len(a_eq)
    n_rows = n_le + n_eq
    if n_rows == 0:
        return True
    width = n + n_le + n_eq  # structural + slack + artificial
    tableau: list[list[Fraction]] = []
    basis: list[int] = []
    for i in range(n_le):
        row = [Fraction(v) for v in a_le[i]] + [Fraction(0)] * (n_le + n_eq)
        row[n + i] = Fraction(1)
        row.append(Fraction(b_le[i]))
        tableau.append(row)
        basis.append(n + i)
    for i in range(n_eq):
        row = [Fraction(v) for v in a_eq[i]] + [Fraction(0)] * (n_le + n_eq)
        row[n + n_le + i] = Fraction(1)
        row.append(Fraction(b_eq[i]))
        tableau.append(row)
        basis.append(n + n_le + i)
    # objective: minimize sum of artificials, expressed over the current basis
    obj = [Fraction(0)] * (width + 1)
    for i in range(n_le, n_rows):
        for j in range(width + 1):
            obj[j] += tableau[i][j]
    artificial_start = n + n_le
    while True:
        entering = next(
            (j for j in range(width) if j < artificial_start and obj[j] > 0), None
        )
        if entering is None:
            break
        ratios = [
            (tableau[i][width] / tableau[i][entering], basis[i], i)
            for i in range(n_rows)
            if tableau[i][entering] > 0
        ]
        if not ratios:
            break  # unbounded direction cannot occur in phase one; defensive
        _, _, leave = min(ratios, key=lambda t: (t[0], t[1]))
        pivot = tableau[leave][entering]
        tableau[leave] = [v / pivot for v in tableau[leave]]
        for i in range(n_rows):
            if i != leave and tableau[i][entering] != 0:
                factor = tableau[i][entering]
                tableau[i] = [
                    v - factor * w for v, w in zip(tableau[i], tableau[leave])
                ]
        if obj[entering] != 0:
            factor = obj[entering]
            obj = [v - factor * w for v, w in zip(obj, tableau[leave])]
        basis[leave] = entering
    return obj[width] == 0
