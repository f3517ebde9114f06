"""Exact rational simplex method: equality-form maximization."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from simplat.errors import IntegrityError
from simplat.exactlp import maximize

F = Fraction


def test_single_variable():
    value, solution = maximize([F(1)], [[F(1)]], [F(4)])
    assert value == 4
    assert solution == [4]


def test_split_between_two_variables():
    # max x subject to x + y = 1, x,y >= 0
    value, solution = maximize([F(1), F(0)], [[F(1), F(1)]], [F(1)])
    assert value == 1
    assert solution == [1, 0]


def test_exact_fractional_optimum():
    # max x + y subject to 2x + 3y = 1 -> put everything on x
    value, solution = maximize([F(1), F(1)], [[F(2), F(3)]], [F(1)])
    assert value == F(1, 2)
    assert solution == [F(1, 2), 0]


def test_two_constraints():
    # max 3x + 2y + z with x + y + z = 4 and x - y = 1... rewrite with
    # nonneg slack: x = y + 1 forces weight onto x
    value, solution = maximize(
        [F(3), F(2), F(0)],
        [[F(1), F(1), F(1)], [F(1), F(-1), F(0)]],
        [F(4), F(1)],
    )
    assert value == F(21, 2)
    assert solution == [F(5, 2), F(3, 2), 0]


def test_negative_rhs_is_normalized():
    # -x - y = -1 is the same constraint set as x + y = 1
    value, _ = maximize([F(1), F(0)], [[F(-1), F(-1)]], [F(-1)])
    assert value == 1


def test_infeasible_returns_none():
    assert maximize([F(1), F(1)],
                    [[F(1), F(1)], [F(1), F(1)]],
                    [F(1), F(2)]) is None


def test_zero_rhs_feasible_at_origin():
    value, solution = maximize([F(-1), F(-1)], [[F(1), F(-1)]], [F(0)])
    assert value == 0
    assert solution == [0, 0]


def test_redundant_rows():
    value, _ = maximize([F(1), F(0)],
                        [[F(1), F(1)], [F(2), F(2)]],
                        [F(1), F(2)])
    assert value == 1


def test_unbounded_raises():
    # objective increases along x, which no constraint touches
    with pytest.raises(IntegrityError):
        maximize([F(1), F(0)], [[F(0), F(1)]], [F(1)])


def _brute_force(objective, eq_rows, eq_rhs):
    """Best vertex by trying every potential basis (tiny instances only)."""
    n = len(objective)
    m = len(eq_rows)
    best = None
    subsets = itertools.chain.from_iterable(
        itertools.combinations(range(n), size) for size in range(min(m, n) + 1))
    for cols in subsets:
        # solve the square-ish system restricted to these columns by
        # Gauss-Jordan over Fractions
        rows = [[eq_rows[i][j] for j in cols] + [eq_rhs[i]] for i in range(m)]
        pivots = []
        r = 0
        for c in range(len(cols)):
            pr = next((i for i in range(r, m) if rows[i][c] != 0), None)
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            rows[r] = [x / rows[r][c] for x in rows[r]]
            for i in range(m):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        if any(all(x == 0 for x in row[:-1]) and row[-1] != 0 for row in rows):
            continue
        point = [F(0)] * n
        consistent = True
        for i, c in enumerate(pivots):
            point[cols[c]] = rows[i][-1]
        for i in range(m):
            if sum(eq_rows[i][j] * point[j] for j in range(n)) != eq_rhs[i]:
                consistent = False
        if not consistent or any(x < 0 for x in point):
            continue
        value = sum(objective[j] * point[j] for j in range(n))
        if best is None or value > best:
            best = value
    return best


def test_matches_basis_enumeration():
    rng = random.Random(101)
    solved = 0
    for _ in range(60):
        n = rng.randint(2, 4)
        m = rng.randint(1, 2)
        objective = [F(rng.randint(-3, 3)) for _ in range(n)]
        eq_rows = [[F(rng.randint(-2, 2)) for _ in range(n)] for _ in range(m)]
        eq_rhs = [F(rng.randint(-2, 2)) for _ in range(m)]
        expected = _brute_force(objective, eq_rows, eq_rhs)
        try:
            got = maximize(objective, eq_rows, eq_rhs)
        except IntegrityError:
            continue  # unbounded; enumeration has no answer to compare
        if got is None:
            assert expected is None
            continue
        value, solution = got
        assert expected is not None
        assert value == expected
        # returned point must itself be feasible and achieve the value
        assert all(x >= 0 for x in solution)
        for row, rhs in zip(eq_rows, eq_rhs):
            assert sum(a * x for a, x in zip(row, solution)) == rhs
        assert sum(c * x for c, x in zip(objective, solution)) == value
        solved += 1
    assert solved >= 20
