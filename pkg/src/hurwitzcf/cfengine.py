"""The H (J. Hurwitz), T (Tanaka) and D (dual) continued-fraction algorithms.

All three run on exact values.  Cycles are detected by looking up the exact
orbit state, never the quotient string, because distinct states on tiling
boundaries can emit equal quotients.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .exactnum import INF, FieldElement
from .gaussian import ZERO, GaussianRational
from .regions import LClass, RegionId, floor_dual, floor_H, floor_T, in_region, l_class, lattice_point, locate, unit_circle_sign

__all__ = [
    "Algorithm",
    "DomainError",
    "Expansion",
    "PartialQuotient",
    "QuotientKind",
    "Status",
    "VerificationError",
    "evaluate_finite",
    "expand",
    "expand_value",
    "normalize_input",
    "periodic_fixpoint_check",
    "step",
    "step_D",
    "step_H",
    "step_T",
]

DEFAULT_MAX_STEPS = 10000

MINUS_ONE = GaussianRational(-1)


class Algorithm(str, enum.Enum):
    H = "H"
    T = "T"
    D = "D"

    @classmethod
    def parse(cls, name) -> Algorithm:
        if isinstance(name, Algorithm):
            return name
        return cls(str(name).upper())


class Status(str, enum.Enum):
    FINITE = "finite"
    PERIODIC = "periodic"
    MINUS_ONE_TAIL = "minus-one-tail"
    TRUNCATED = "truncated"


class DomainError(ValueError):
    """The input lies outside the domain of the requested map."""


class VerificationError(AssertionError):
    """An exact post-condition failed; indicates a bug or a false theorem."""


class QuotientKind(str, enum.Enum):
    ZERO = "zero"
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class PartialQuotient:
    value: GaussianRational

    @property
    def kind(self) -> QuotientKind:
        if self.value.is_zero():
            return QuotientKind.ZERO
        return QuotientKind.EVEN if self.value.is_even() else QuotientKind.ODD

    @property
    def lclass(self) -> LClass | None:
        return l_class(self.value) if self.kind is QuotientKind.EVEN else None

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Expansion:
    """Outcome of one algorithm run.

    ``states[j]`` is the orbit state alpha_(j+1); for a periodic run the
    state following the last listed one equals ``states[len(preperiod)]``.
    """

    algorithm: Algorithm
    initial: GaussianRational
    preperiod: tuple[PartialQuotient, ...]
    period: tuple[PartialQuotient, ...]
    status: Status
    states: tuple = field(default=(), repr=False, compare=False)

    @property
    def quotients(self) -> tuple[PartialQuotient, ...]:
        return self.preperiod + self.period

    @property
    def purely_periodic(self) -> bool:
        return self.status is Status.PERIODIC and not self.preperiod


# ---------------------------------------------------------------------------
# single steps


def step_H(z: FieldElement) -> tuple[GaussianRational, FieldElement]:
    if isinstance(z, GaussianRational) and z.is_zero():
        raise DomainError("T_H step at 0: the expansion has terminated")
    r = 1 / z
    loc = locate(r)
    if loc is not None:
        # r is certified strictly inside the box around a, so r - a lies in the open box
        a = lattice_point(*loc)
        return a, r - a
    a = floor_H(r)
    nxt = r - a
    if not in_region(nxt, RegionId.Xclosure):
        raise VerificationError(f"T_H left the closed box at {z}")
    return a, nxt


def step_T(z: FieldElement) -> tuple[GaussianRational, FieldElement]:
    if isinstance(z, GaussianRational) and z.is_zero():
        raise DomainError("T_T step at 0: the expansion has terminated")
    r = 1 / z
    loc = locate(r)
    if loc is not None:
        a = lattice_point(*loc)
        return a, r - a
    a = floor_T(r)
    nxt = r - a
    if not in_region(nxt, RegionId.X):
        raise VerificationError(f"T_T left the box X at {z}")
    return a, nxt


def step_D(z: FieldElement):
    if z is INF:
        raise DomainError("T_D step at infinity: the expansion has terminated")
    if unit_circle_sign(z) < 0:
        raise DomainError(f"{z} is inside the unit disk")
    a = floor_dual(z)
    if isinstance(z, GaussianRational) and z.is_integer():
        return a, INF
    nxt = 1 / (z - a)
    if unit_circle_sign(nxt) < 0:
        raise VerificationError(f"T_D left the domain |z| >= 1 at {z}")
    return a, nxt


_STEPS = {Algorithm.H: step_H, Algorithm.T: step_T, Algorithm.D: step_D}


def step(z: FieldElement, algorithm) -> tuple[GaussianRational, FieldElement]:
    return _STEPS[Algorithm.parse(algorithm)](z)


def _check_domain(alpha, algorithm: Algorithm):
    if algorithm is Algorithm.H:
        ok = in_region(alpha, RegionId.Xclosure)
    elif algorithm is Algorithm.T:
        ok = in_region(alpha, RegionId.X)
    else:
        ok = alpha is not INF and unit_circle_sign(alpha) >= 0
    if not ok:
        raise DomainError(f"{alpha} is outside the domain of algorithm {algorithm.value}")


def _terminal(z, algorithm: Algorithm) -> bool:
    if algorithm is Algorithm.D:
        return z is INF
    return isinstance(z, GaussianRational) and z.is_zero()


def expand(alpha: FieldElement, algorithm="H", max_steps: int = DEFAULT_MAX_STEPS, initial=ZERO) -> Expansion:
    """Run one algorithm from ``alpha`` (already in its domain) until it stops or cycles."""
    algorithm = Algorithm.parse(algorithm)
    _check_domain(alpha, algorithm)
    step_fn = _STEPS[algorithm]
    seen: dict = {}
    states: list = []
    quotients: list[PartialQuotient] = []
    z = alpha
    while True:
        if _terminal(z, algorithm):
            return Expansion(algorithm, initial, tuple(quotients), (), Status.FINITE, tuple(states))
        if algorithm is Algorithm.T and z == MINUS_ONE:
            # -1 is a fixed point of T_T with quotient 0
            states.append(z)
            return Expansion(
                algorithm, initial, tuple(quotients), (PartialQuotient(ZERO),), Status.MINUS_ONE_TAIL, tuple(states)
            )
        start = seen.get(z)
        if start is not None:
            return Expansion(
                algorithm,
                initial,
                tuple(quotients[:start]),
                tuple(quotients[start:]),
                Status.PERIODIC,
                tuple(states),
            )
        if len(quotients) >= max_steps:
            return Expansion(algorithm, initial, tuple(quotients), (), Status.TRUNCATED, tuple(states))
        seen[z] = len(states)
        states.append(z)
        a, z = step_fn(z)
        quotients.append(PartialQuotient(a))


def normalize_input(alpha: FieldElement, algorithm="H") -> tuple[GaussianRational, FieldElement]:
    """Split off the integer part: ``alpha = a0 + z`` with z in the algorithm's domain.

    The dual algorithm needs no splitting (its first quotient plays the role
    of a0), so D inputs are returned unchanged and must satisfy |alpha| >= 1.
    """
    algorithm = Algorithm.parse(algorithm)
    if algorithm is Algorithm.D:
        _check_domain(alpha, algorithm)
        return ZERO, alpha
    a0 = floor_H(alpha) if algorithm is Algorithm.H else floor_T(alpha)
    return a0, alpha - a0


def expand_value(alpha: FieldElement, algorithm="H", max_steps: int = DEFAULT_MAX_STEPS) -> Expansion:
    """Normalize an arbitrary value and expand it."""
    a0, z = normalize_input(alpha, algorithm)
    return expand(z, algorithm, max_steps, initial=a0)


# ---------------------------------------------------------------------------
# verification


def _fold_back(quotients, tail, algorithm: Algorithm):
    """Undo steps from the last quotient backwards, starting at state ``tail``."""
    z = tail
    for pq in reversed(quotients):
        a = pq.value
        if algorithm is Algorithm.D:
            z = a if z is INF else a + 1 / z
        else:
            z = 1 / (a + z)
    return z


def evaluate_finite(e: Expansion) -> FieldElement:
    """Exact value of a terminating expansion (or of a T expansion ending in -1)."""
    if e.status is Status.FINITE:
        tail = INF if e.algorithm is Algorithm.D else ZERO
    elif e.status is Status.MINUS_ONE_TAIL:
        tail = MINUS_ONE
    else:
        raise ValueError(f"cannot evaluate a {e.status.value} expansion")
    return e.initial + _fold_back(e.preperiod, tail, e.algorithm)


def _mobius_period(period, algorithm: Algorithm):
    """Matrix [[p, q], [r, s]] of the composite inverse step over one period."""
    p, q, r, s = 1, 0, 0, 1
    for pq in period:
        a = pq.value
        # H/T inverse step z -> 1/(a + z) is [[0, 1], [1, a]]; D: z -> a + 1/z is [[a, 1], [1, 0]]
        if algorithm is Algorithm.D:
            p, q, r, s = p * a + q, p, r * a + s, r
        else:
            p, q, r, s = q, p + q * a, s, r + s * a
    return p, q, r, s


def periodic_fixpoint_check(e: Expansion, alpha: FieldElement) -> bool:
    """Check that ``e`` describes ``alpha`` and that its period's Mobius map fixes the cycle entry."""
    if e.status is not Status.PERIODIC:
        raise ValueError("periodic_fixpoint_check needs a periodic expansion")
    z = alpha - e.initial
    forward = []
    for pq in e.preperiod:
        z = 1 / z - pq.value if e.algorithm is not Algorithm.D else 1 / (z - pq.value)
        forward.append(z)
    entry = z
    p, q, r, s = _mobius_period(e.period, e.algorithm)
    image = (p * entry + q) / (r * entry + s)
    if image != entry:
        return False
    return e.initial + _fold_back(e.preperiod, entry, e.algorithm) == alpha
