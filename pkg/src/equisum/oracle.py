"""Brute-force reference solver for small instances.

Deliberately naive and independent of the constructive solvers: elements
are placed from n down to 1, each into some container with enough room
left, with backtracking. Two symmetry cuts keep desk-scale sweeps fast:
element n always goes into container 1, and among containers with the same
remaining capacity only the first is tried.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import EquisumError, Instance, Partitioning, delta, divisors_of_delta

HARD_MAX_N = 40


class BudgetExceededError(EquisumError, RuntimeError):
    """The search ran out of nodes before reaching a verdict."""


@dataclass(frozen=True)
class OracleLimits:
    max_n: int = 30
    max_nodes: int = 5_000_000

    def __post_init__(self) -> None:
        if not 1 <= self.max_n <= HARD_MAX_N:
            raise ValueError(f"max_n must lie in [1, {HARD_MAX_N}], got {self.max_n}")
        if self.max_nodes < 1:
            raise ValueError("max_nodes must be positive")


def brute_force_solve(n: int, k: int, t: int, limits: OracleLimits = OracleLimits()) -> Partitioning | None:
    """Return some (k, t)-partitioning of 1..n, or None if none exists.

    Raises BudgetExceededError when ``limits.max_nodes`` search nodes are
    used up; that outcome says nothing about existence.
    """
    if n < 1 or k < 1 or t < 1:
        raise ValueError("n, k and t must be positive")
    if n > limits.max_n:
        raise ValueError(f"n = {n} exceeds oracle limit max_n = {limits.max_n}")
    instance = Instance(n, k, t)
    if k * t != delta(n):
        return None

    remaining = [t] * k
    members: list[list[int]] = [[] for _ in range(k)]
    nodes = 0

    def place(x: int) -> bool:
        nonlocal nodes
        if x == 0:
            return not any(remaining)
        nodes += 1
        if nodes > limits.max_nodes:
            raise BudgetExceededError(f"oracle exceeded {limits.max_nodes} nodes on {instance}")
        candidates = range(1) if x == n else range(k)
        tried = set()
        for j in candidates:
            room = remaining[j]
            if room < x or room in tried:
                continue
            tried.add(room)
            remaining[j] -= x
            members[j].append(x)
            if place(x - 1):
                return True
            members[j].pop()
            remaining[j] += x
        return False

    if not place(n):
        return None
    return Partitioning.from_sets(instance, members)


def existence_sweep(n_max: int, limits: OracleLimits = OracleLimits()) -> list[tuple[int, int, int, bool]]:
    """Oracle verdicts for every n <= n_max and every divisor pair of delta(n).

    Pairs with t < n are included; they are expected to be unsolvable.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    rows = []
    for n in range(1, n_max + 1):
        total = delta(n)
        for k in divisors_of_delta(n):
            t = total // k
            rows.append((n, k, t, brute_force_solve(n, k, t, limits) is not None))
    return rows
