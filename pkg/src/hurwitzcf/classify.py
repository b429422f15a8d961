"""Pure-periodicity predicates and the orbit-based oracle they are checked against."""

from __future__ import annotations

from dataclasses import dataclass, field

from .cfengine import (
    DEFAULT_MAX_STEPS,
    Algorithm,
    DomainError,
    Status,
    expand,
    step_D,
)
from .exactnum import FieldElement, QuadraticElement, abs2, galois_conjugate, make_field, sqrt_element
from .regions import RegionId, floor_H, floor_T, in_region

__all__ = [
    "InconclusiveOrbit",
    "PurePeriodicityReport",
    "classify",
    "in_N1",
    "in_N2",
    "n1_witnesses",
    "n2_witnesses",
    "N1_PAIRS",
    "N1_CORRECTED_PAIRS",
    "N2_PAIRS",
    "N2_CORRECTED_PAIRS",
    "purely_periodic_oracle",
    "sqrt_reduced",
    "verify_dual_reversal",
]


class InconclusiveOrbit(RuntimeError):
    """The orbit did not close within the step budget."""


def _pairs(x_range, y_range, k_range):
    pairs = [(RegionId.indexed("X", j), RegionId.indexed("W", j)) for j in x_range]
    pairs += [(RegionId.indexed("Y", j), RegionId.indexed("Yp", j)) for j in y_range]
    pairs += [(RegionId.indexed("K", j), RegionId.indexed("Kp", j)) for j in k_range]
    return tuple(pairs)


N1_PAIRS = _pairs(range(1, 9), range(1, 5), range(1, 5))
N2_PAIRS = _pairs(range(1, 9), range(3, 5), range(1, 3))

# A conjugate on the Y_j line lies in W_j on either side of the segment, and
# purely periodic orbits do reach the far ray: 1-(1+i)sqrt(3)/3 on Y1 has
# period 4 and its conjugate has s = 1+sqrt(3)/3 > 1.  The corrected sets
# add Y_j x Y''_j.
N1_CORRECTED_PAIRS = N1_PAIRS + tuple((RegionId.indexed("Y", j), RegionId.indexed("Ypp", j)) for j in range(1, 5))
N2_CORRECTED_PAIRS = N2_PAIRS + tuple((RegionId.indexed("Y", j), RegionId.indexed("Ypp", j)) for j in range(3, 5))


def _require_quadratic(alpha):
    if not isinstance(alpha, QuadraticElement):
        raise ValueError(f"{alpha} is not quadratic over Q(i)")


def _witnesses(alpha: FieldElement, pairs) -> list[tuple[RegionId, RegionId]]:
    _require_quadratic(alpha)
    conj = galois_conjugate(alpha)
    return [(r1, r2) for r1, r2 in pairs if in_region(alpha, r1) and in_region(conj, r2)]


def n1_witnesses(alpha: FieldElement) -> list[tuple[RegionId, RegionId]]:
    """Product sets of N1 containing (alpha, alpha')."""
    return _witnesses(alpha, N1_PAIRS)


def n2_witnesses(alpha: FieldElement) -> list[tuple[RegionId, RegionId]]:
    return _witnesses(alpha, N2_PAIRS)


def in_N1(alpha: FieldElement, corrected: bool = False) -> bool:
    """(alpha, alpha') in N1, read literally unless ``corrected``."""
    return bool(_witnesses(alpha, N1_CORRECTED_PAIRS if corrected else N1_PAIRS))


def in_N2(alpha: FieldElement, corrected: bool = False) -> bool:
    return bool(_witnesses(alpha, N2_CORRECTED_PAIRS if corrected else N2_PAIRS))


def purely_periodic_oracle(alpha: FieldElement, algorithm="H", max_steps: int = DEFAULT_MAX_STEPS):
    """Run the orbit; return ``(purely_periodic, period_length or None)``."""
    algorithm = Algorithm.parse(algorithm)
    _require_quadratic(alpha)
    e = expand(alpha, algorithm, max_steps)
    if e.status is Status.TRUNCATED:
        raise InconclusiveOrbit(f"orbit of {alpha} did not close within {max_steps} steps")
    if e.status is Status.PERIODIC:
        return (not e.preperiod), len(e.period)
    return False, None


def verify_dual_reversal(alpha: FieldElement, max_steps: int = DEFAULT_MAX_STEPS) -> bool:
    """Replay the conjugate H-orbit backwards with the dual algorithm.

    For a purely periodic H-orbit of length m this checks ``|alpha_(m)'| > 1``
    and that T_D, started at ``alpha_(m)'``, visits ``alpha_(m-1)', ...,
    alpha_(1)', alpha_(m)', ...`` exactly for two full periods.
    """
    _require_quadratic(alpha)
    e = expand(alpha, Algorithm.H, max_steps)
    if not e.purely_periodic:
        raise DomainError(f"H-orbit of {alpha} is not purely periodic")
    conj = [galois_conjugate(s) for s in e.states]
    if (abs2(conj[-1]) - 1).sign() <= 0:
        return False
    expected = list(reversed(conj)) * 2
    z = conj[-1]
    for target in expected:
        if z != target:
            return False
        _, z = step_D(z)
    return True


def sqrt_reduced(m: int, n: int, algorithm="H") -> FieldElement:
    """``sqrt(m+ni) - floor(sqrt(m+ni))`` for the floor matching the algorithm."""
    algorithm = Algorithm.parse(algorithm)
    make_field(m, n)
    root = sqrt_element(m, n)
    return root - (floor_T(root) if algorithm is Algorithm.T else floor_H(root))


@dataclass(frozen=True)
class PurePeriodicityReport:
    algorithm: Algorithm
    predicate_result: bool
    oracle_result: bool
    period_length: int | None
    witness: list = field(default_factory=list)
    corrected_result: bool | None = None

    @property
    def agrees(self) -> bool:
        return self.predicate_result == self.oracle_result

    @property
    def far_ray_case(self) -> bool:
        """The literal predicate misses a pair only the corrected sets contain."""
        return not self.predicate_result and bool(self.corrected_result)


def classify(alpha: FieldElement, algorithm="H", max_steps: int = DEFAULT_MAX_STEPS) -> PurePeriodicityReport:
    """Evaluate the region predicate and the orbit oracle side by side."""
    algorithm = Algorithm.parse(algorithm)
    if algorithm is Algorithm.D:
        raise ValueError("classification is defined for the H and T algorithms")
    if algorithm is Algorithm.H:
        pairs, corrected = N1_PAIRS, N1_CORRECTED_PAIRS
    else:
        pairs, corrected = N2_PAIRS, N2_CORRECTED_PAIRS
    witness = _witnesses(alpha, pairs)
    extra = witness or _witnesses(alpha, corrected[len(pairs) :])
    oracle, period = purely_periodic_oracle(alpha, algorithm, max_steps)
    return PurePeriodicityReport(algorithm, bool(witness), oracle, period, witness, bool(extra))
