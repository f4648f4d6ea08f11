"""Closed-form Gauss and meander partitionings.

The meander grid has ``rows`` = n/k (even n) or (n+1)/k (odd n) rows and one
column per container. Rows come in loops: an odd row runs down from left to
right, the following even row runs up. For odd n the grid is built for n+1
elements and every cell is shifted down by one, which puts 0 into the grid;
the 0 is kept in the matrix but dropped from the partitioning.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .core import EquisumError, Instance, Partitioning, delta


class NotApplicableError(EquisumError, ValueError):
    """2k divides neither n (n even) nor n+1 (n odd)."""


class Parity(enum.Enum):
    EVEN_N = "even"
    ODD_N = "odd"


@dataclass(frozen=True)
class GaussParams:
    k_G: int
    t_G: int


@dataclass(frozen=True)
class MeanderMatrix:
    rows: int
    cols: int
    cells: tuple[tuple[int, ...], ...]
    parity: Parity

    def column(self, j: int) -> list[int]:
        """Cells of column j (0-based), top to bottom."""
        return [row[j] for row in self.cells]

    def columns(self) -> list[list[int]]:
        return [list(col) for col in zip(*self.cells)]

    def render(self, headers: Sequence[str] | None = None) -> str:
        """Aligned text layout, one header per column then the rows."""
        if headers is None:
            headers = [f"T_{j}" for j in range(1, self.cols + 1)]
        width = max(
            max(len(h) for h in headers),
            max(len(str(x)) for row in self.cells for x in row),
        )
        lines = [" ".join(h.rjust(width) for h in headers)]
        lines.append("-" * len(lines[0]))
        for row in self.cells:
            lines.append(" ".join(str(x).rjust(width) for x in row))
        return "\n".join(lines)


def gauss_params(n: int) -> GaussParams:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return GaussParams((n + 1) // 2, n if n % 2 else n + 1)


def gauss_partitioning(n: int) -> Partitioning:
    params = gauss_params(n)
    if n % 2:
        containers = [(n,)] + [(i - 1, n - (i - 1)) for i in range(2, (n + 1) // 2 + 1)]
    else:
        containers = [(i, n - (i - 1)) for i in range(1, n // 2 + 1)]
    return Partitioning(Instance(n, params.k_G, params.t_G), tuple(containers))


def meander_applicable(n: int, k: int) -> bool:
    if n < 1 or k < 1:
        return False
    if n % 2 == 0:
        return n % (2 * k) == 0
    return (n + 1) % (2 * k) == 0


def _grid(m: int, k: int, shift: int) -> list[tuple[int, ...]]:
    # m even and 2k | m
    rows = []
    for i in range(1, m // (2 * k) + 1):
        rows.append(tuple(m - (2 * k * (i - 1) + (j - 1)) - shift for j in range(1, k + 1)))
        rows.append(tuple(m - 2 * k * i + j - shift for j in range(1, k + 1)))
    return rows


def meander_matrix(n: int, k: int) -> MeanderMatrix:
    if not meander_applicable(n, k):
        raise NotApplicableError(f"meander construction needs 2k | n (n even) or 2k | n+1 (n odd); got n={n}, k={k}")
    if n % 2 == 0:
        cells = _grid(n, k, 0)
        parity = Parity.EVEN_N
    else:
        cells = _grid(n + 1, k, 1)
        parity = Parity.ODD_N
    return MeanderMatrix(len(cells), k, tuple(cells), parity)


def meander_partitioning(n: int, k: int) -> tuple[MeanderMatrix, Partitioning]:
    matrix = meander_matrix(n, k)
    # every column reads strictly downward, so reversing sorts it; the only
    # possible 0 is the bottom cell of the first column
    containers = [col[::-1] for col in zip(*matrix.cells)]
    if containers[0][0] == 0:
        containers[0] = containers[0][1:]
    return matrix, Partitioning(Instance(n, k, delta(n) // k), tuple(containers))
