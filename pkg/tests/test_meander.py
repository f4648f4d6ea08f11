import pytest

from equisum.core import delta, verify
from equisum.meander import (
    NotApplicableError,
    Parity,
    gauss_params,
    gauss_partitioning,
    meander_applicable,
    meander_matrix,
    meander_partitioning,
)

# grids as printed, rows top to bottom
GRID_16_4 = [
    [16, 15, 14, 13],
    [9, 10, 11, 12],
    [8, 7, 6, 5],
    [1, 2, 3, 4],
]
GRID_30_5 = [
    [30, 29, 28, 27, 26],
    [21, 22, 23, 24, 25],
    [20, 19, 18, 17, 16],
    [11, 12, 13, 14, 15],
    [10, 9, 8, 7, 6],
    [1, 2, 3, 4, 5],
]
GRID_30_3 = [
    [30, 29, 28],
    [25, 26, 27],
    [24, 23, 22],
    [19, 20, 21],
    [18, 17, 16],
    [13, 14, 15],
    [12, 11, 10],
    [7, 8, 9],
    [6, 5, 4],
    [1, 2, 3],
]
GRID_15_4 = [
    [15, 14, 13, 12],
    [8, 9, 10, 11],
    [7, 6, 5, 4],
    [0, 1, 2, 3],
]
GRID_19_5 = [
    [19, 18, 17, 16, 15],
    [10, 11, 12, 13, 14],
    [9, 8, 7, 6, 5],
    [0, 1, 2, 3, 4],
]


def applicable_pairs(n_max):
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            if meander_applicable(n, k):
                yield n, k


@pytest.mark.parametrize(
    "n, k, grid",
    [(16, 4, GRID_16_4), (30, 5, GRID_30_5), (30, 3, GRID_30_3), (15, 4, GRID_15_4), (19, 5, GRID_19_5)],
)
def test_printed_grids(n, k, grid):
    m = meander_matrix(n, k)
    assert [list(r) for r in m.cells] == grid
    assert m.rows == len(grid) and m.cols == k


def test_partitioning_columns():
    _, p = meander_partitioning(16, 4)
    assert p.containers == ((1, 8, 9, 16), (2, 7, 10, 15), (3, 6, 11, 14), (4, 5, 12, 13))
    assert p.instance.t == 34
    _, p = meander_partitioning(30, 3)
    assert p.containers[0] == (1, 6, 7, 12, 13, 18, 19, 24, 25, 30)
    assert p.instance.t == 155
    m, p = meander_partitioning(15, 4)
    assert m.parity is Parity.ODD_N
    assert p.containers == ((7, 8, 15), (1, 6, 9, 14), (2, 5, 10, 13), (3, 4, 11, 12))
    assert p.instance.t == 30


@pytest.mark.parametrize(
    "n, k, expected",
    [
        (16, 4, True),
        (19, 5, True),
        (16, 3, False),
        (15, 8, True),
        (9, 3, False),
        (9, 1, True),
        (9, 5, True),
        (1, 1, True),
        (5, 2, False),
    ],
)
def test_applicable(n, k, expected):
    assert meander_applicable(n, k) is expected


def test_not_applicable_raises():
    with pytest.raises(NotApplicableError):
        meander_partitioning(16, 3)


@pytest.mark.parametrize(
    "n, containers, k_g, t_g",
    [
        (4, ((1, 4), (2, 3)), 2, 5),
        (15, ((15,),) + tuple((i, 15 - i) for i in range(1, 8)), 8, 15),
        (16, tuple((i, 17 - i) for i in range(1, 9)), 8, 17),
        (1, ((1,),), 1, 1),
    ],
)
def test_gauss(n, containers, k_g, t_g):
    p = gauss_partitioning(n)
    assert p.containers == containers
    assert gauss_params(n).k_G == k_g and gauss_params(n).t_G == t_g
    assert k_g * t_g == delta(n)
    assert verify(p).valid


def test_grid_shape_and_bijection():
    for n, k in applicable_pairs(120):
        m = meander_matrix(n, k)
        cells = sorted(x for row in m.cells for x in row)
        start = 1 if n % 2 == 0 else 0
        assert cells == list(range(start, n + 1))
        assert m.rows % 2 == 0
        for i, row in enumerate(m.cells):
            if i % 2 == 0:
                assert all(a > b for a, b in zip(row, row[1:]))
            else:
                assert all(a < b for a, b in zip(row, row[1:]))


def test_partitionings_verify():
    for n, k in applicable_pairs(150):
        _, p = meander_partitioning(n, k)
        assert verify(p).valid, (n, k)


def test_render_layout():
    text = meander_matrix(16, 4).render()
    lines = text.splitlines()
    assert lines[0].split() == ["T_1", "T_2", "T_3", "T_4"]
    assert [list(map(int, line.split())) for line in lines[2:]] == GRID_16_4
