"""Exact rank and LP feasibility, cross-checked against independent routes."""

import random
from fractions import Fraction

import pytest

from edge_ideal_lab.linalg import feasible_nonneg, integer_rank


def fraction_gauss_rank(rows):
    """Independent oracle: plain Gaussian elimination over Fraction."""
    m = [[Fraction(v) for v in row] for row in rows]
    if not m or not m[0]:
        return 0
    rank = 0
    n_rows, n_cols = len(m), len(m[0])
    row = 0
    for col in range(n_cols):
        pivot = next((r for r in range(row, n_rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        for r in range(n_rows):
            if r != row and m[r][col] != 0:
                factor = m[r][col] / m[row][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[row])]
        rank += 1
        row += 1
    return rank


class TestIntegerRank:
    def test_known_matrices(self):
        assert integer_rank([[1, 0], [0, 1]]) == 2
        assert integer_rank([[1, 2], [2, 4]]) == 1
        assert integer_rank([[0, 0], [0, 0]]) == 0
        assert integer_rank([]) == 0

    def test_against_fraction_elimination(self):
        rng = random.Random(3)
        for _ in range(300):
            rows = rng.randint(1, 6)
            cols = rng.randint(1, 6)
            matrix = [
                [rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)
            ]
            assert integer_rank(matrix) == fraction_gauss_rank(matrix), matrix


class TestFeasibility:
    def test_simple_cases(self):
        # x1 + x2 = 2, x1 <= 1, x2 <= 1 is exactly satisfiable
        assert feasible_nonneg([[1, 0], [0, 1]], [1, 1], [[1, 1]], [2])
        # but not with sum 3
        assert not feasible_nonneg([[1, 0], [0, 1]], [1, 1], [[1, 1]], [3])

    def test_degenerate_zero_rhs(self):
        assert feasible_nonneg([[1, 1]], [0], [[1, 0]], [0])
        assert not feasible_nonneg([[1, 1]], [0], [[1, 1]], [1])

    def test_negative_rhs_rejected(self):
        with pytest.raises(ValueError):
            feasible_nonneg([[1]], [-1], [], [])

    def test_against_scipy(self):
        scipy_opt = pytest.importorskip("scipy.optimize")
        rng = random.Random(11)
        for _ in range(250):
            n = rng.randint(1, 5)
            m_le = rng.randint(0, 4)
            m_eq = rng.randint(0, 2)
            if m_le + m_eq == 0:
                continue
            a_le = [[rng.randint(0, 4) for _ in range(n)] for _ in range(m_le)]
            b_le = [rng.randint(0, 6) for _ in range(m_le)]
            a_eq = [[rng.randint(0, 4) for _ in range(n)] for _ in range(m_eq)]
            b_eq = [rng.randint(0, 6) for _ in range(m_eq)]
            mine = feasible_nonneg(a_le, b_le, a_eq, b_eq)
            res = scipy_opt.linprog(
                [0] * n,
                A_ub=a_le or None,
                b_ub=b_le or None,
                A_eq=a_eq or None,
                b_eq=b_eq or None,
                bounds=[(0, None)] * n,
                method="highs",
            )
            assert mine == (res.status == 0)
