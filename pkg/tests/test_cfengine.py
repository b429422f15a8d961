import random

import pytest

from hurwitzcf.cfengine import (
    Algorithm,
    DomainError,
    QuotientKind,
    Status,
    evaluate_finite,
    expand,
    expand_value,
    normalize_input,
    periodic_fixpoint_check,
    step_D,
    step_H,
    step_T,
)
from hurwitzcf.exactnum import INF, sqrt_element
from hurwitzcf.gaussian import GaussianRational
from hurwitzcf.gaussian import gaussian_int as G
from hurwitzcf.textio import parse_expr

import oracles


def quotients(e):
    return [q.value for q in e.quotients]


def test_step_H_examples():
    assert step_H(sqrt_element(2, 1) - 2)[0] == G(-1, -1)
    assert step_H(GaussianRational(1, 2, 5)) == (G(1, -2), G(0))
    assert step_H(GaussianRational(1, 0, 2)) == (G(2), G(0))


def test_step_T_examples():
    assert step_T(GaussianRational(2, 0, 5)) == (G(2), GaussianRational(1, 0, 2))
    assert step_T(GaussianRational(1, 2, 5)) == (G(2, -2), G(-1))
    assert step_T(G(-1)) == (G(0), G(-1))


def test_step_D_examples():
    assert step_D(G(3, 1)) == (G(3, 1), INF)
    assert step_D(G(0, 1)) == (G(0, 1), INF)
    with pytest.raises(DomainError):
        step_D(GaussianRational(1, 0, 2))
    with pytest.raises(DomainError):
        step_D(INF)


def test_zero_has_no_step():
    for fn in (step_H, step_T):
        with pytest.raises(DomainError):
            fn(G(0))


def test_example_expansions():
    e = expand(sqrt_element(2, 1) - 2, "H")
    assert e.status is Status.PERIODIC and e.preperiod == ()
    assert [q.value for q in e.period] == [G(-1, -1), G(-3, -1), G(1, 1), G(3, 1)]

    a = parse_expr("1-sqrt(2)+(-2+sqrt(2))*i")
    t = expand(a, "T")
    assert [q.value for q in t.period] == [G(-1, 1), G(4, -2), G(-1, 1), G(-2, 4)]
    h = expand(a, "H")
    assert [q.value for q in h.period] == [G(-1, 1), G(3, -3), G(1, -1), G(-3, 3)]

    f = expand(GaussianRational(2, 0, 5), "H")
    assert f.status is Status.FINITE and quotients(f) == [G(2), G(2)]


def test_minus_one_tail():
    e = expand(G(2, 1) / G(9, 8), "T")
    assert e.status is Status.MINUS_ONE_TAIL
    assert [q.value for q in e.preperiod] == [G(5, 1), G(2, -2)]
    assert [q.value for q in e.period] == [G(0)]
    assert evaluate_finite(e) == G(2, 1) / G(9, 8)


def test_odd_final_quotient():
    e = expand(G(2, 1) / G(9, 8), "H")
    assert quotients(e) == [G(5, 1), G(1, -2)]
    assert e.quotients[-1].kind is QuotientKind.ODD
    assert e.quotients[0].kind is QuotientKind.EVEN


def test_evaluate_finite():
    assert evaluate_finite(expand(GaussianRational(2, 0, 5))) == GaussianRational(2, 0, 5)
    assert evaluate_finite(expand(G(2, 1) / G(9, 8))) == G(2, 1) / G(9, 8)
    with pytest.raises(ValueError):
        evaluate_finite(expand(sqrt_element(2, 0) - 2))


def test_normalize_input():
    a0, z = normalize_input(sqrt_element(2, 0))
    assert a0 == G(2) and z == sqrt_element(2, 0) - 2
    assert normalize_input(G(0)) == (G(0), G(0))
    a0, z = normalize_input(sqrt_element(-3, 0))
    assert a0 == G(0, 2) and z == sqrt_element(-3, 0) - G(0, 2)


def test_fixpoint_check():
    a = sqrt_element(2, 0) - 2
    e = expand(a)
    assert [q.value for q in e.period] == [G(-2), G(4)]
    assert periodic_fixpoint_check(e, a)
    assert not periodic_fixpoint_check(e, sqrt_element(2, 0) - 1 - 1 + GaussianRational(1, 0, 7))


def test_fixpoint_check_with_preperiod():
    a = (sqrt_element(2, 0) - 1) / 3
    e = expand(a)
    assert e.status is Status.PERIODIC and e.preperiod
    assert periodic_fixpoint_check(e, a)


def test_dual_expansion_of_conjugate_is_periodic():
    e = expand(-sqrt_element(2, 0) - 2, "D")
    assert e.status is Status.PERIODIC
    assert periodic_fixpoint_check(e, -sqrt_element(2, 0) - 2)


def test_dual_rational_terminates():
    e = expand(GaussianRational(7, 3, 2), "D")
    assert e.status is Status.FINITE
    assert evaluate_finite(e) == GaussianRational(7, 3, 2)


def test_domain_checks():
    with pytest.raises(DomainError):
        expand(G(2), "H")
    with pytest.raises(DomainError):
        expand(G(1), "T")  # u = v = 1/2 lies on the excluded edges of X
    with pytest.raises(DomainError):
        expand(GaussianRational(1, 0, 3), "D")


def test_truncation():
    e = expand(sqrt_element(2, 1) - 2, "H", max_steps=2)
    assert e.status is Status.TRUNCATED and len(e.quotients) == 2


def test_quadratic_orbits_match_float_replay():
    rng = random.Random(8)
    compared = 0
    for _ in range(60):
        m, n = rng.choice([(2, 1), (3, 0), (-2, 3), (5, -1), (0, 3)])
        a = GaussianRational(rng.randint(-20, 20), rng.randint(-20, 20), rng.randint(1, 5))
        a = a + GaussianRational(rng.randint(1, 6), rng.randint(-6, 6), rng.randint(1, 3)) * sqrt_element(m, n)
        e = expand_value(a, "H", max_steps=12)
        try:
            expected = oracles.orbit(complex(a - e.initial), 8)
        except ArithmeticError:
            continue
        got = [oracles.to_complex(q.value) for q in e.quotients[: len(expected)]]
        assert got == expected[: len(got)]
        compared += 1
    assert compared > 40


def test_quadratic_irrationals_are_eventually_periodic():
    rng = random.Random(1)
    for _ in range(40):
        m, n = rng.choice([(2, 1), (3, 0), (-2, 3), (-4, 3)])
        a = GaussianRational(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(1, 3))
        a = a + GaussianRational(rng.randint(1, 4), rng.randint(-4, 4), rng.randint(1, 3)) * sqrt_element(m, n)
        for alg in (Algorithm.H, Algorithm.T):
            e = expand_value(a, alg)
            assert e.status is Status.PERIODIC
            assert periodic_fixpoint_check(e, a)


def test_h_and_t_share_quotients_inside_the_open_box():
    e_h = expand(sqrt_element(2, 1) - 2, "H")
    e_t = expand(sqrt_element(2, 1) - 2, "T")
    assert quotients(e_h) == quotients(e_t)
