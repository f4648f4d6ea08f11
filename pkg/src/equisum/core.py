"""Instances, partitionings, feasibility and verification.

Everything here operates on plain immutable values. Arithmetic follows
unsigned 64-bit semantics: any quantity that would not fit raises
:class:`ArithmeticOverflowError` instead of wrapping.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import accumulate
from typing import Iterable, Sequence

U64_MAX = 2**64 - 1

Container = tuple[int, ...]


class EquisumError(Exception):
    """Base class for all errors raised by this package."""


class InfeasibleSumError(EquisumError, ValueError):
    """k * t differs from the triangular number of n."""


class InfeasibleTargetError(EquisumError, ValueError):
    """The target t is smaller than n, so element n fits nowhere."""


class ArithmeticOverflowError(EquisumError, OverflowError):
    """A quantity left the unsigned 64-bit range."""


class InvalidPartitioningError(EquisumError, ValueError):
    pass


class MalformedInputError(EquisumError, ValueError):
    """Serialized input does not follow the canonical JSON schema."""


def _checked(value: int, what: str) -> int:
    if value < 0 or value > U64_MAX:
        raise ArithmeticOverflowError(f"{what} = {value} outside unsigned 64-bit range")
    return value


def delta(n: int) -> int:
    """Return the triangular number n(n+1)/2."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return _checked(n * (n + 1) // 2, f"delta({n})")


@dataclass(frozen=True)
class Instance:
    """A homogeneous instance: split 1..n into k sets, each summing to t.

    Constructing the dataclass directly performs no checks (so malformed
    data can still be represented and verified); use :func:`make_instance`
    for a validated instance.
    """

    n: int
    k: int
    t: int

    @property
    def delta(self) -> int:
        return delta(self.n)

    def __str__(self) -> str:
        return f"Pi({self.n};{self.k},{self.t})"


def make_instance(n: int, k: int, t: int) -> Instance:
    for name, value in (("n", n), ("k", k), ("t", t)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ValueError(f"{name} must be a positive integer, got {value!r}")
        _checked(value, name)
    total = delta(n)
    if _checked(k * t, "k*t") != total:
        raise InfeasibleSumError(f"k*t = {k * t} but delta({n}) = {total}")
    if t < n:
        raise InfeasibleTargetError(f"t = {t} < n = {n}")
    return Instance(n, k, t)


def _prime_factors(m: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    p = 2
    while p * p <= m:
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def divisors_of_delta(n: int) -> list[int]:
    """All divisors of delta(n), ascending.

    n and n+1 are coprime, so the factorisation of delta(n) is assembled
    from trial division of n and n+1 separately (each at most ~2**32).
    """
    total = delta(n)
    if total == 0:
        return []
    factors = _prime_factors(n)
    for p, e in _prime_factors(n + 1).items():
        factors[p] = factors.get(p, 0) + e
    factors[2] -= 1
    divs = [1]
    for p, e in factors.items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def enumerate_feasible(n: int) -> list[tuple[int, int]]:
    """Every (k, t) with k*t = delta(n) and t >= n, ordered by k."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    total = delta(n)
    return [(k, total // k) for k in divisors_of_delta(n) if total // k >= n]


def largest_feasible_k(n: int) -> int:
    return enumerate_feasible(n)[-1][0]


@dataclass(frozen=True)
class Partitioning:
    instance: Instance
    containers: tuple[Container, ...]

    @classmethod
    def from_sets(cls, instance: Instance, containers: Iterable[Iterable[int]]) -> Partitioning:
        """Build a partitioning with every container sorted ascending."""
        return cls(instance, tuple(tuple(sorted(c)) for c in containers))

    def sums(self) -> list[int]:
        return [sum(c) for c in self.containers]


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    sum_failures: list[tuple[int, int]] = field(default_factory=list)
    duplicate_elements: list[int] = field(default_factory=list)
    missing_elements: list[int] = field(default_factory=list)
    foreign_elements: list[int] = field(default_factory=list)

    def describe(self) -> list[str]:
        lines = []
        for index, actual in self.sum_failures:
            lines.append(f"container {index}: sum {actual}")
        if self.duplicate_elements:
            lines.append(f"duplicate elements: {self.duplicate_elements}")
        if self.missing_elements:
            lines.append(f"missing elements: {self.missing_elements}")
        if self.foreign_elements:
            lines.append(f"foreign elements: {self.foreign_elements}")
        return lines


def verify(p: Partitioning) -> VerificationReport:
    """Check sums, disjointness and coverage of a partitioning.

    Never raises on bad data. Containers are indexed from 1; when the
    number of containers differs from k, the surplus ones (index > k) and
    the absent ones (reported with sum 0) count as sum failures.
    """
    n, k, t = p.instance.n, p.instance.k, p.instance.t
    seen: set[int] = set()
    duplicates: set[int] = set()
    foreign: set[int] = set()
    sum_failures = []
    for index, container in enumerate(p.containers, start=1):
        total = 0
        for x in container:
            total += x
            if x in seen:
                duplicates.add(x)
            else:
                seen.add(x)
            if not 1 <= x <= n:
                foreign.add(x)
        if index > k or total != t:
            sum_failures.append((index, total))
    for index in range(len(p.containers) + 1, k + 1):
        sum_failures.append((index, 0))
    missing = [x for x in range(1, n + 1) if x not in seen]
    valid = not (sum_failures or duplicates or missing or foreign)
    return VerificationReport(
        valid=valid,
        sum_failures=sum_failures,
        duplicate_elements=sorted(duplicates),
        missing_elements=missing,
        foreign_elements=sorted(foreign),
    )


@dataclass(frozen=True)
class CutPlan:
    """Cut offsets for k sticks of length t; stick j yields container j."""

    t: int
    sticks: tuple[tuple[int, ...], ...]

    def pieces(self) -> list[list[int]]:
        out = []
        for offsets in self.sticks:
            ends = (0, *offsets, self.t)
            out.append([b - a for a, b in zip(ends, ends[1:])])
        return out


def cut_plan(p: Partitioning) -> CutPlan:
    report = verify(p)
    if not report.valid:
        raise InvalidPartitioningError("; ".join(report.describe()))
    sticks = []
    for container in p.containers:
        prefix = list(accumulate(sorted(container)))
        sticks.append(tuple(prefix[:-1]))
    return CutPlan(p.instance.t, tuple(sticks))


def partitioning_from_cut_plan(instance: Instance, plan: CutPlan) -> Partitioning:
    return Partitioning.from_sets(instance, plan.pieces())


# -- canonical JSON ---------------------------------------------------------


def to_dict(p: Partitioning) -> dict:
    inst = p.instance
    return {
        "n": inst.n,
        "k": inst.k,
        "t": inst.t,
        "containers": [list(c) for c in p.containers],
    }


def to_json(p: Partitioning) -> str:
    return json.dumps(to_dict(p))


def _is_int(x: object) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def from_dict(obj: object) -> Partitioning:
    """Parse the canonical mapping; element order is preserved as given."""
    if not isinstance(obj, dict):
        raise MalformedInputError("top level must be a JSON object")
    for key in ("n", "k", "t"):
        if not _is_int(obj.get(key)):
            raise MalformedInputError(f"field {key!r} must be an integer")
    containers = obj.get("containers")
    if not isinstance(containers, list) or not all(
        isinstance(c, list) and all(_is_int(x) for x in c) for c in containers
    ):
        raise MalformedInputError("'containers' must be a list of integer lists")
    return Partitioning(
        Instance(obj["n"], obj["k"], obj["t"]),
        tuple(tuple(c) for c in containers),
    )


def from_json(text: str) -> Partitioning:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"not valid JSON: {exc}") from exc
    return from_dict(obj)


def containers_equal(a: Sequence[Iterable[int]], b: Sequence[Iterable[int]]) -> bool:
    """Container-for-container set equality."""
    return len(a) == len(b) and all(set(x) == set(y) for x, y in zip(a, b))
