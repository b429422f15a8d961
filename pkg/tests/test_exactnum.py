from fractions import Fraction

import pytest

from hurwitzcf.exactnum import (
    INF,
    FieldMismatch,
    FieldType,
    QuadraticElement,
    abs2,
    embed,
    galois_conjugate,
    gaussian_sqrt,
    im_part,
    make_field,
    re_part,
    real_sign,
    sqrt_element,
)
from hurwitzcf.gaussian import GaussianRational, gaussian_int

from oracles import principal_sqrt

G = gaussian_int


def test_gaussian_division_matches_conjugate_multiplication():
    q = G(2, 1) / G(9, 8)
    # (2+i)(9-8i) = 26-7i over |9+8i|^2 = 145
    assert q == GaussianRational(26, -7, 145)
    assert 1 / q == GaussianRational(9, 8) / G(2, 1) == GaussianRational(26, 7, 5)


def test_reciprocal_of_second_state():
    assert 1 / GaussianRational(1, 2, 5) == G(1, -2)


def test_identity_and_zero_division():
    q = GaussianRational(3, -4, 7)
    assert q * 1 == q and q + 0 == q
    with pytest.raises(ZeroDivisionError):
        q / G(0)


def test_canonical_strings():
    assert [str(z) for z in (G(2, 1), G(2, -1), G(3), G(0, 2), G(0, -1), G(0, 1), G(0))] == [
        "2+i", "2-i", "3", "2i", "-i", "i", "0",
    ]  # fmt: skip


@pytest.mark.parametrize(
    "m, n, ftype, l",
    [(2, 1, FieldType.A, None), (0, 3, FieldType.B, 6), (-4, 3, FieldType.B, 2), (2, 0, FieldType.B, 2), (-3, 0, FieldType.B, 3)],
)
def test_field_type(m, n, ftype, l):
    f = make_field(m, n)
    assert f.field_type is ftype
    assert f.l == l
    if ftype is FieldType.B:
        assert f.unit * f.unit * f.l == G(m, n)


def test_type_b_unit_for_minus_four_plus_three_i():
    assert make_field(-4, 3).unit == GaussianRational(1, 3, 2)


@pytest.mark.parametrize("m, n", [(0, 2), (-1, 0), (3, 4), (-3, 4), (0, -2)])
def test_square_radicands_are_rejected(m, n):
    with pytest.raises(ValueError):
        make_field(m, n)
    root = gaussian_sqrt(G(m, n))
    assert root * root == G(m, n)


def test_sqrt_of_square_demotes():
    assert sqrt_element(0, 2) == G(1, 1)
    assert sqrt_element(3, 4) == G(2, 1)


@pytest.mark.parametrize("m, n", [(2, 1), (-2, 0), (0, -3), (-5, 2), (1, -1), (3, 0)])
def test_principal_branch_matches_cmath(m, n):
    approx = embed(sqrt_element(m, n), 40).midpoint()
    assert abs(approx - principal_sqrt(m, n)) < 1e-9


def test_inverse_of_shifted_root_is_exact():
    a = sqrt_element(2, 1) - 2
    assert (1 / a) * a == 1
    assert 1 / (sqrt_element(2, 0) - 1) == sqrt_element(2, 0) + 1


def test_conjugate_flips_root():
    a = sqrt_element(2, 1) - 2
    assert galois_conjugate(a) == -sqrt_element(2, 1) - 2
    assert galois_conjugate(galois_conjugate(a)) == a
    # conjugation is a field automorphism
    b = sqrt_element(2, 1) * G(1, 3) + GaussianRational(1, 0, 2)
    assert galois_conjugate(a * b) == galois_conjugate(a) * galois_conjugate(b)


def test_mixed_fields_refuse():
    with pytest.raises(FieldMismatch):
        sqrt_element(2, 0) + sqrt_element(3, 0)


def test_quadratic_element_needs_irrational_part():
    with pytest.raises(ValueError):
        QuadraticElement(make_field(2, 0), G(1), G(0))
    assert sqrt_element(2, 0) - sqrt_element(2, 0) == 0


def test_embed_example_value():
    e = embed(sqrt_element(2, 1) - 2, 30)
    assert e.radius <= Fraction(1, 2**30)
    assert abs(float(e.mid_re) - (-0.54465)) < 1e-5
    assert abs(float(e.mid_im) - 0.34356) < 1e-5


def test_embed_rational_is_exact():
    e = embed(GaussianRational(3, 0, 2), 8)
    assert (e.mid_re, e.mid_im, e.radius) == (Fraction(3, 2), 0, 0)


def test_embed_type_b():
    e = embed(sqrt_element(-3, 0) - G(0, 2), 20)
    assert abs(e.midpoint() - complex(0, 3**0.5 - 2)) < 2**-19


def test_real_sign_examples():
    z = sqrt_element(2, 0) - 1
    assert real_sign(abs2(z) - 1) == -1
    assert real_sign(abs2(z - z)) == 0
    assert real_sign(abs2(sqrt_element(2, 0) + 1) - 1) == 1


def test_type_a_coordinates_never_hit_half():
    # 1, Re and Im of a type-A element are rationally independent
    for m, n in [(2, 1), (1, 2), (-2, 1), (5, 3), (-1, -2)]:
        z = sqrt_element(m, n)
        for k in range(-4, 5):
            shifted = z + GaussianRational(k, 0, 2)
            assert real_sign(re_part(shifted) + im_part(shifted) - 1) != 0


def test_sign_agrees_with_floats():
    import random

    rng = random.Random(3)
    for _ in range(200):
        m, n = rng.choice([(2, 1), (3, 0), (-2, 3), (0, 5), (-4, 3)])
        x = GaussianRational(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(1, 5))
        y = GaussianRational(rng.randint(-9, 9) or 1, rng.randint(-9, 9), rng.randint(1, 5))
        z = x + y * sqrt_element(m, n)
        c = complex(float(x.real), float(x.imag)) + complex(float(y.real), float(y.imag)) * principal_sqrt(m, n)
        value = abs(c) ** 2 - 2
        if abs(value) > 1e-9:
            assert real_sign(abs2(z) - 2) == (1 if value > 0 else -1)


def test_infinity_singleton():
    import pickle

    assert pickle.loads(pickle.dumps(INF)) is INF
    assert str(INF) == "INF"
