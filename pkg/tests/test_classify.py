import random

import pytest

from hurwitzcf.cfengine import Algorithm, DomainError, expand, periodic_fixpoint_check
from hurwitzcf.classify import (
    InconclusiveOrbit,
    classify,
    in_N1,
    in_N2,
    n1_witnesses,
    purely_periodic_oracle,
    sqrt_reduced,
    verify_dual_reversal,
)
from hurwitzcf.exactnum import galois_conjugate, sqrt_element
from hurwitzcf.gaussian import GaussianRational
from hurwitzcf.gaussian import gaussian_int as G
from hurwitzcf.regions import RegionId, in_region
from hurwitzcf.suites import k_arc_points
from hurwitzcf.textio import parse_expr

# purely periodic point of Y2 whose conjugate lies beyond the Y2 segment
FAR_RAY = parse_expr("(-20+21i)+(-12-12i)*sqrt(-3)")


def test_predicates_on_examples():
    a = sqrt_element(2, 1) - 2
    assert in_N1(a) and in_N2(a)
    assert n1_witnesses(a) == [(RegionId.X3, RegionId.W3)]
    b = (sqrt_element(2, 0) - 1) / 3
    assert not in_N1(b) and not in_N2(b)
    assert in_N1(sqrt_element(2, 0) - 2)


def test_rational_input_rejected():
    with pytest.raises(ValueError):
        in_N1(GaussianRational(1, 0, 3))
    with pytest.raises(ValueError):
        classify(GaussianRational(1, 0, 3))


def test_oracle_examples():
    assert purely_periodic_oracle(parse_expr("1-sqrt(2)+(-2+sqrt(2))*i"), "H") == (True, 4)
    assert purely_periodic_oracle(sqrt_element(-3, 0) - G(0, 2), "H") == (True, 1)
    periodic, _ = purely_periodic_oracle((sqrt_element(2, 0) - 1) / 3, "H")
    assert not periodic


def test_oracle_inconclusive():
    with pytest.raises(InconclusiveOrbit):
        purely_periodic_oracle(sqrt_element(2, 1) - 2, "H", max_steps=2)


@pytest.mark.parametrize("expr, m", [("sqrt(2+i)-2", 4), ("sqrt(2)-2", 2), ("sqrt(-3)-2i", 1)])
def test_dual_reversal(expr, m):
    a = parse_expr(expr)
    assert len(expand(a).period) == m
    assert verify_dual_reversal(a)


def test_dual_reversal_needs_pure_periodicity():
    with pytest.raises(DomainError):
        verify_dual_reversal((sqrt_element(2, 0) - 1) / 3)


@pytest.mark.parametrize(
    "m, n, period",
    [
        (2, 1, [G(-1, -1), G(-3, -1), G(1, 1), G(3, 1)]),
        (3, 0, [G(-4), G(4)]),
        (-1, -3, [G(0, 2), G(2, -2)]),
    ],
)
def test_sqrt_reduced(m, n, period):
    e = expand(sqrt_reduced(m, n, "H"), "H")
    assert e.preperiod == () and [q.value for q in e.period] == period


def test_sqrt_reduced_rejects_squares():
    with pytest.raises(ValueError):
        sqrt_reduced(0, 2)


def test_k3_point_is_in_N1_but_not_N2():
    pts = k_arc_points(random.Random(0), 3, 6, RegionId.X)
    assert pts
    for z in pts:
        assert in_region(z, RegionId.K3)
        h = classify(z, "H")
        t = classify(z, "T")
        assert h.agrees and t.agrees
        assert not t.oracle_result


def test_far_ray_counterexample_to_literal_N1():
    conj = galois_conjugate(FAR_RAY)
    assert in_region(FAR_RAY, RegionId.Y2)
    assert in_region(conj, RegionId.W2) and in_region(conj, RegionId.Ypp2)
    assert not in_region(conj, RegionId.Yp2)
    e = expand(FAR_RAY, "H")
    assert e.purely_periodic and len(e.period) == 108
    assert periodic_fixpoint_check(e, FAR_RAY)
    assert verify_dual_reversal(FAR_RAY)
    rep = classify(FAR_RAY, "H")
    assert rep.oracle_result and not rep.predicate_result
    assert rep.far_ray_case and rep.corrected_result
    assert in_N1(FAR_RAY, corrected=True)


def test_short_far_ray_example():
    a = parse_expr("1-(1+i)*sqrt(3)/3")
    e = expand(a, "H")
    assert e.purely_periodic
    assert [q.value for q in e.period] == [G(1, 1), G(-3, -3), G(-1, -1), G(-1, -1)]
    assert in_region(a, RegionId.Y1) and in_region(galois_conjugate(a), RegionId.Ypp1)
    assert not in_N1(a) and in_N1(a, corrected=True)
    assert verify_dual_reversal(a)


def test_classify_report_fields():
    rep = classify(sqrt_element(2, 1) - 2, Algorithm.T)
    assert rep.algorithm is Algorithm.T
    assert rep.predicate_result and rep.oracle_result and rep.period_length == 4
    with pytest.raises(ValueError):
        classify(sqrt_element(2, 1) - 2, "D")
