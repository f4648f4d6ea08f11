"""Recursive construction of homogeneous partitionings.

The solver works on a chain of frames. A frame is a list of open slots of
equal capacity, each slot belonging to one of the k root containers, plus
the count of still-unplaced elements 1..n. Each step fills some slots with
the largest unplaced elements, possibly splits slots in two, and hands the
smaller uniform problem on to the next frame. The chain is driven by a
loop, so stack depth does not depend on n.

Regimes, for a frame with n elements, k slots and capacity t:

* ``2n - 1 >= t``, t even: pair off the top elements, put t/2 alone into a
  half slot, continue with half-size slots.
* ``2n - 1 >= t``, t odd: pair off the top elements, continue with the
  remaining whole slots.
* ``2n <= t``: give every slot a pair from the top 2k elements, continue
  with the same slots at reduced capacity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

from . import meander
from .core import EquisumError, Instance, Partitioning, delta


class InvariantError(EquisumError, RuntimeError):
    """A recursion step produced an inconsistent frame. Always a bug."""


class CaseTag(enum.Enum):
    LOW_EVEN = "LOW_EVEN"
    LOW_ODD = "LOW_ODD"
    HIGH = "HIGH"
    BASE_K1 = "BASE_K1"
    BASE_EMPTY = "BASE_EMPTY"
    MEANDER_STOP = "MEANDER_STOP"


@dataclass(frozen=True)
class SlotFrame:
    roots: tuple[int, ...]  # 1-based root container index per slot
    capacity: int
    n_remaining: int

    @property
    def k(self) -> int:
        return len(self.roots)

    @property
    def slots(self) -> list[tuple[int, int]]:
        return [(r, self.capacity) for r in self.roots]

    @classmethod
    def root(cls, inst: Instance) -> SlotFrame:
        return cls(tuple(range(1, inst.k + 1)), inst.t, inst.n)


@dataclass(frozen=True)
class CaseStep:
    case_tag: CaseTag
    n: int
    k: int
    t: int
    placements: list[tuple[int, tuple[int, ...]]]
    next: SlotFrame | None = None
    matrix: meander.MeanderMatrix | None = None

    @property
    def placed_count(self) -> int:
        return sum(len(elems) for _, elems in self.placements)

    def describe(self) -> str:
        return f"{self.case_tag.value} n={self.n} k={self.k} t={self.t} placed={self.placed_count}"


def _next_frame(roots: tuple[int, ...], capacity: int, n_next: int) -> SlotFrame:
    if n_next < 0:
        raise InvariantError(f"negative remainder n'={n_next}")
    if delta(n_next) != len(roots) * capacity:
        raise InvariantError(
            f"delta({n_next}) = {delta(n_next)} != k'*t' = {len(roots)}*{capacity}"
        )
    if roots and capacity < n_next:
        raise InvariantError(f"t' = {capacity} < n' = {n_next}")
    return SlotFrame(roots, capacity, n_next)


def case_low_even(frame: SlotFrame) -> CaseStep:
    n, k, t, roots = frame.n_remaining, frame.k, frame.capacity, frame.roots
    if not (2 * n - 1 >= t and t % 2 == 0):
        raise ValueError(f"LOW_EVEN needs 2n-1 >= t and t even (n={n}, t={t})")
    filled = (2 * n - t) // 2
    placements = [(roots[i], (t - n + i, n - i)) for i in range(filled)]
    children = tuple(r for r in roots[filled:] for _ in (0, 1))
    half = t // 2
    placements.append((children[0], (half,)))
    nxt = _next_frame(children[1:], half, t - n - 1)
    return CaseStep(CaseTag.LOW_EVEN, n, k, t, placements, nxt)


def case_low_odd(frame: SlotFrame) -> CaseStep:
    n, k, t, roots = frame.n_remaining, frame.k, frame.capacity, frame.roots
    if not (2 * n - 1 >= t and t % 2 == 1):
        raise ValueError(f"LOW_ODD needs 2n-1 >= t and t odd (n={n}, t={t})")
    filled = (2 * n - t + 1) // 2
    placements = [(roots[i], (t - n + i, n - i)) for i in range(filled)]
    if t == n:
        # the first pair is {0, n}; 0 is not an element, and nothing remains
        placements[0] = (roots[0], (n,))
        nxt = _next_frame((), t, 0)
    else:
        nxt = _next_frame(roots[filled:], t, t - n - 1)
    return CaseStep(CaseTag.LOW_ODD, n, k, t, placements, nxt)


def case_high(frame: SlotFrame) -> CaseStep:
    n, k, t, roots = frame.n_remaining, frame.k, frame.capacity, frame.roots
    if 2 * n > t:
        raise ValueError(f"HIGH needs 2n <= t (n={n}, t={t})")
    placements = [(roots[i], (n - 2 * k + i + 1, n - i)) for i in range(k)]
    nxt = _next_frame(roots, t - 2 * (n - k) - 1, n - 2 * k)
    return CaseStep(CaseTag.HIGH, n, k, t, placements, nxt)


def _meander_step(frame: SlotFrame) -> CaseStep:
    n, k = frame.n_remaining, frame.k
    matrix, part = meander.meander_partitioning(n, k)
    placements = list(zip(frame.roots, part.containers))
    return CaseStep(CaseTag.MEANDER_STOP, n, k, frame.capacity, placements, None, matrix)


def dispatch(frame: SlotFrame, use_meander_stop: bool = False) -> CaseStep:
    """Pick and run the step that applies to ``frame``."""
    n, k, t = frame.n_remaining, frame.k, frame.capacity
    if delta(n) != k * t:
        raise InvariantError(f"frame {n=}, {k=}, {t=} violates delta(n) = k*t")
    if k == 0:
        return CaseStep(CaseTag.BASE_EMPTY, n, k, t, [])
    if k == 1:
        return CaseStep(CaseTag.BASE_K1, n, k, t, [(frame.roots[0], tuple(range(1, n + 1)))])
    if use_meander_stop and meander.meander_applicable(n, k):
        return _meander_step(frame)
    if 2 * n - 1 >= t:
        return case_low_even(frame) if t % 2 == 0 else case_low_odd(frame)
    return case_high(frame)


def _assemble(k: int, steps: list[CaseStep]) -> tuple[tuple[int, ...], ...]:
    # Placement tuples are ascending, so a root filled by a single placement
    # needs no copy or sort; that covers most roots for large k.
    bins: list = [None] * k
    for step in steps:
        for root, elems in step.placements:
            current = bins[root - 1]
            if current is None:
                bins[root - 1] = elems
            elif type(current) is tuple:
                bins[root - 1] = [*current, *elems]
            else:
                current.extend(elems)
    if None in bins:
        raise InvariantError(f"root container {bins.index(None) + 1} never filled")
    return tuple(b if type(b) is tuple else tuple(sorted(b)) for b in bins)


@dataclass(frozen=True)
class SolveTrace:
    partitioning: Partitioning
    steps: list[CaseStep]

    @property
    def meander_step(self) -> CaseStep | None:
        last = self.steps[-1]
        return last if last.case_tag is CaseTag.MEANDER_STOP else None


def solve_trace(
    inst: Instance,
    use_meander_stop: bool = True,
    on_step: Callable[[CaseStep], None] | None = None,
) -> SolveTrace:
    """Run the solver and keep every step. ``inst`` must be validated."""
    frame: SlotFrame | None = SlotFrame.root(inst)
    steps = []
    while frame is not None:
        step = dispatch(frame, use_meander_stop)
        if step.next is not None and step.next.n_remaining >= frame.n_remaining:
            raise InvariantError(f"no progress at {step.describe()}")
        steps.append(step)
        if on_step is not None:
            on_step(step)
        frame = step.next

    return SolveTrace(Partitioning(inst, _assemble(inst.k, steps)), steps)


def solve(inst: Instance, use_meander_stop: bool = True) -> Partitioning:
    return solve_trace(inst, use_meander_stop).partitioning
