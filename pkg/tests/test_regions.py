import random
from fractions import Fraction

import pytest

from hurwitzcf.exactnum import galois_conjugate, sqrt_element
from hurwitzcf.gaussian import GaussianRational
from hurwitzcf.gaussian import gaussian_int as G
from hurwitzcf.regions import (
    LClass,
    RegionId,
    coords,
    floor_dual,
    floor_H,
    floor_T,
    in_Q_w,
    in_region,
    in_S_w,
    l_class,
    lattice_coords,
    lattice_point,
    locate,
    unit_circle_sign,
)

import oracles

HALF = Fraction(1, 2)


def even_points(radius):
    return [G(a, b) for a in range(-radius, radius + 1) for b in range(-radius, radius + 1) if (a + b) % 2 == 0]


def test_lattice_coordinates_round_trip():
    for w in even_points(6):
        assert lattice_point(*lattice_coords(w)) == w


def test_odd_point_has_no_lattice_coordinates():
    with pytest.raises(ValueError):
        lattice_coords(G(1, 0))


@pytest.mark.parametrize(
    "w, diagonal, k",
    [(G(1, 1), True, 0), (G(2), False, 0), (G(0, -2), False, 3), (G(-1, 1), True, 1), (G(3, -1), False, 0), (G(-4, 2), False, 2)],
)
def test_l_class(w, diagonal, k):
    assert l_class(w) == LClass(diagonal, k)


def brute_l_class(w):
    # L(i^k(1+i)) = {i^k m(1+i) : m > 0}, L(2 i^k) = {i^k(m(1+i) + l(1-i)) : m, l > 0}
    for k in range(4):
        for m in range(1, 8):
            if G(0, 1) ** k * m * G(1, 1) == w:
                return LClass(True, k)
            for l in range(1, 8):
                if G(0, 1) ** k * (m * G(1, 1) + l * G(1, -1)) == w:
                    return LClass(False, k)
    raise AssertionError(w)


def test_l_class_against_definition():
    for w in even_points(6):
        if not w.is_zero():
            assert l_class(w) == brute_l_class(w)


@pytest.mark.parametrize(
    "z, expected",
    [(GaussianRational(5, 0, 2), G(2)), (G(1), G(2)), (G(1, -2), G(2, -2)), (G(-1), G(0))],
)
def test_floor_T(z, expected):
    assert floor_T(z) == expected


@pytest.mark.parametrize(
    "z, expected",
    [(GaussianRational(26, 7, 5), G(5, 1)), (GaussianRational(3, 1, 10), G(0)), (G(2, -1), G(2, -1)), (G(1), G(1))],
)
def test_floor_H(z, expected):
    assert floor_H(z) == expected


@pytest.mark.parametrize(
    "z, expected",
    [(G(3, 1), G(3, 1)), (GaussianRational(1, 0, 2), G(0)), (GaussianRational(12, 9, 10), G(1, 1))],
)
def test_floor_dual(z, expected):
    assert floor_dual(z) == expected


def test_floors_agree_with_float_oracle_off_edges():
    rng = random.Random(11)
    checked = 0
    for _ in range(400):
        m, n = rng.choice([(2, 1), (-2, 0), (3, 2), (0, 5), (-1, -3)])
        z = GaussianRational(rng.randint(-60, 60), rng.randint(-60, 60), rng.randint(1, 9))
        z = z + GaussianRational(rng.randint(-5, 5) or 1, rng.randint(-5, 5), rng.randint(1, 4)) * sqrt_element(m, n)
        c = complex(z)
        if oracles.margin(c) < 1e-9:
            continue
        expected = oracles.floor_T(c)
        assert oracles.to_complex(floor_T(z)) == expected
        assert oracles.to_complex(floor_H(z)) == expected
        checked += 1
    assert checked > 350


def test_floor_H_lands_in_its_cell():
    rng = random.Random(5)
    for _ in range(300):
        z = GaussianRational(rng.randint(-40, 40), rng.randint(-40, 40), rng.choice((1, 2, 4, 8)))
        a = floor_H(z)
        assert a == z if z.is_integer() else in_Q_w(z, a)


def test_q_cells_unique_on_edges_and_vertices():
    pts = [GaussianRational(a, b, 2) for a in range(-8, 9) for b in range(-8, 9)]
    for z in pts:
        hits = [w for w in even_points(7) if in_Q_w(z, w)]
        assert len(hits) == 1, (z, hits)


def test_vertex_two_minus_i_belongs_to_one_q_cell():
    z = G(2, -1)
    assert not in_Q_w(z, G(2)) and not in_Q_w(z, G(2, -2))
    assert [w for w in even_points(5) if in_Q_w(z, w)] == [G(1, -1)]


def test_quarter_point_in_q2():
    assert in_Q_w(GaussianRational(5, 0, 2), G(2))


def test_s_cells_partition_off_odd_points():
    rng = random.Random(2)
    for _ in range(500):
        d = rng.randint(1, 12)
        z = GaussianRational(rng.randint(-5 * d, 5 * d), rng.randint(-5 * d, 5 * d), d)
        hits = [w for w in even_points(7) if in_S_w(z, w)]
        if z.is_integer() and not z.is_even():
            assert hits == []
        else:
            assert len(hits) == 1, (z, hits)


def test_s_cell_example():
    assert in_S_w(GaussianRational(12, 9, 10), G(1, 1))


def test_odd_centre_rejected():
    with pytest.raises(ValueError):
        in_S_w(G(0), G(1))
    with pytest.raises(ValueError):
        in_Q_w(G(0), G(2, 1))


def test_locate_matches_exact_coordinates():
    rng = random.Random(9)
    for _ in range(200):
        m, n = rng.choice([(2, 1), (3, 0), (-3, 0), (-4, 3), (1, 2)])
        z = GaussianRational(rng.randint(-30, 30), rng.randint(-30, 30), rng.randint(1, 6))
        z = z + GaussianRational(rng.randint(-4, 4) or 1, rng.randint(-4, 4), rng.randint(1, 6)) * sqrt_element(m, n)
        loc = locate(z)
        c = coords(z)
        if loc is not None:
            assert loc == ((c.u + HALF).floor(), (c.v + HALF).floor())


def test_sector_example():
    a = sqrt_element(2, 1) - 2
    assert in_region(a, RegionId.X3)
    assert in_region(galois_conjugate(a), RegionId.W3)


def test_half_diagonal_is_on_no_arc():
    z = GaussianRational(1, 1, 2)
    assert not in_region(z, RegionId.K1)
    assert not in_region(z, RegionId.K2)


def test_x_sectors_cover_the_open_box():
    rng = random.Random(4)
    for _ in range(300):
        z = GaussianRational(rng.randint(-49, 49), rng.randint(-49, 49), 100)
        if not in_region(z, RegionId.Xopen):
            continue
        assert any(in_region(z, RegionId.indexed("Xbar", j)) for j in range(1, 9))


def test_y_line_parts():
    # points i^{j-1}(s - i(1-s)) for s < 0, 0 <= s <= 1 and s > 1
    for j in range(1, 5):
        rot = G(0, 1) ** (j - 1)
        for s, part in ((GaussianRational(-3, 0, 2), "Yp"), (GaussianRational(1, 0, 3), "Y"), (GaussianRational(5, 0, 2), "Ypp")):
            z = rot * (s - G(0, 1) * (1 - s))
            assert in_region(z, RegionId.indexed(part, j))
            for other in {"Yp", "Y", "Ypp"} - {part}:
                assert not in_region(z, RegionId.indexed(other, j))


def test_unit_circle_sign():
    assert unit_circle_sign(G(0, 1)) == 0
    assert unit_circle_sign(GaussianRational(3, 4, 5)) == 0
    assert unit_circle_sign(sqrt_element(2, 0) - 1) == -1
    assert unit_circle_sign(sqrt_element(2, 0)) == 1
