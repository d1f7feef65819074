from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

import oracles
from weylface.lp import LPProblem, check_certificate, lp_solve


def test_bounded_max():
    p = LPProblem([[1]], ["<="], [3], [1])
    res = lp_solve(p)
    assert res.optimal and res.value == 3 and res.x == (3,)
    assert check_certificate(p, res)


def test_unbounded_returns_feasible_point():
    p = LPProblem([[1]], [">="], [0], [1])
    res = lp_solve(p)
    assert res.status == "unbounded"
    assert res.x is not None and res.x[0] >= 0


def test_infeasible():
    res = lp_solve(LPProblem([[1], [1]], ["=", "="], [1, 2], [0]))
    assert res.status == "infeasible" and not res.feasible


def test_min_sense_and_free_variables():
    # min x + y with x - y = 3, y free, x >= 0, y >= -2
    p = LPProblem([[1, -1], [0, 1]], ["=", ">="], [3, -2], [1, 1], nonneg=[True, False], sense="min")
    res = lp_solve(p)
    assert res.optimal and res.value == -1 and res.x == (1, -2)
    assert check_certificate(p, res)


def test_redundant_equalities():
    p = LPProblem([[1, 1], [2, 2], [1, -1]], ["=", "=", "="], [2, 4, 0], [1, 0])
    res = lp_solve(p)
    assert res.optimal and res.x == (1, 1)
    assert check_certificate(p, res)


def test_dimension_errors():
    with pytest.raises(ValueError):
        LPProblem([[1, 2]], ["<="], [1], [1])
    with pytest.raises(ValueError):
        LPProblem([[1]], ["<"], [1], [1])
    with pytest.raises(ValueError):
        LPProblem([[1]], ["<="], [1, 2], [1])


def test_degenerate_cycling_example():
    # Beale's example cycles under the textbook rule; Bland's rule must terminate.
    A = [[F(1, 4), -60, F(-1, 25), 9], [F(1, 2), -90, F(-1, 50), 3], [0, 0, 1, 0]]
    p = LPProblem(A, ["<="] * 3, [0, 0, 1], [F(3, 4), -150, F(1, 50), -6])
    res = lp_solve(p)
    assert res.optimal and res.value == F(1, 20)
    assert check_certificate(p, res)


small = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@given(
    st.integers(1, 3).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(st.lists(small, min_size=n, max_size=n), min_size=1, max_size=3),
            st.lists(st.fractions(min_value=-2, max_value=5, max_denominator=2), min_size=3, max_size=3),
            st.lists(small, min_size=n, max_size=n),
        )
    )
)
def test_matches_vertex_enumeration(case):
    n, rows, rhs, c = case
    rhs = rhs[: len(rows)]
    # box keeps the feasible region bounded
    A = rows + [[F(int(i == j)) for j in range(n)] for i in range(n)]
    b = rhs + [F(6)] * n
    p = LPProblem(A, ["<="] * len(A), b, c)
    res = lp_solve(p)
    want = oracles.lp_by_vertices(A, b, c)
    if want is None:
        assert res.status == "infeasible"
    else:
        assert res.optimal and res.value == want
        assert check_certificate(p, res)
        mres = lp_solve(LPProblem(A, ["<="] * len(A), b, [-v for v in c], sense="min"))
        assert mres.value == -want
