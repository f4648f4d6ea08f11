import pytest

from equisum.core import delta, divisors_of_delta, verify
from equisum.oracle import BudgetExceededError, OracleLimits, brute_force_solve, existence_sweep


def test_three_two():
    p = brute_force_solve(3, 2, 3)
    assert p.containers == ((3,), (1, 2))
    assert verify(p).valid


def test_target_below_n_has_no_solution():
    assert brute_force_solve(3, 3, 2) is None
    assert brute_force_solve(4, 5, 2) is None


def test_nine_five():
    p = brute_force_solve(9, 5, 9)
    assert verify(p).valid
    assert p.sums() == [9] * 5


def test_sum_mismatch_is_none():
    assert brute_force_solve(5, 2, 7) is None


def test_sweep_examples():
    assert existence_sweep(1) == [(1, 1, 1, True)]
    rows = existence_sweep(3)
    for row in [(3, 1, 6, True), (3, 2, 3, True), (3, 3, 2, False), (3, 6, 1, False)]:
        assert row in rows
    rows = existence_sweep(4)
    for row in [(4, 2, 5, True), (4, 5, 2, False), (4, 10, 1, False)]:
        assert row in rows


def test_sweep_covers_every_divisor_pair():
    rows = existence_sweep(14)
    for n in range(1, 15):
        got = sorted(k for m, k, _, _ in rows if m == n)
        assert got == divisors_of_delta(n)
        assert all(k * t == delta(n) for m, k, t, _ in rows if m == n)
    assert all(solvable == (t >= n) for n, _, t, solvable in rows)


def test_outputs_verify_and_are_deterministic():
    for n in range(1, 16):
        for k in divisors_of_delta(n):
            t = delta(n) // k
            p = brute_force_solve(n, k, t)
            if p is not None:
                assert verify(p).valid
                assert brute_force_solve(n, k, t) == p


def test_limits():
    with pytest.raises(ValueError):
        brute_force_solve(31, 2, 248)
    with pytest.raises(ValueError):
        OracleLimits(max_n=41)
    assert brute_force_solve(31, 2, 248, OracleLimits(max_n=40)) is not None


def test_budget_is_distinct_from_absence():
    with pytest.raises(BudgetExceededError):
        brute_force_solve(20, 5, 42, OracleLimits(max_nodes=3))
