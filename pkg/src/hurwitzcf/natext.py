"""Natural extensions of T_H and T_T acting on pairs (z, w)."""

from __future__ import annotations

from dataclasses import dataclass

from .cfengine import Algorithm, DomainError, VerificationError, step
from .exactnum import INF, FieldElement, abs2
from .gaussian import GaussianRational
from .regions import RegionId, in_region, in_S_w

__all__ = [
    "CollisionReport",
    "ExtPoint",
    "density_identity_check",
    "ext_orbit_period",
    "ext_step",
    "in_Xhat",
    "in_Xtilde",
    "injectivity_sample",
    "on_excluded_boundary",
    "step_problems",
]


@dataclass(frozen=True)
class ExtPoint:
    z: FieldElement
    w: object  # FieldElement or INF

    def __str__(self):
        return f"({self.z}, {'inf' if self.w is INF else self.w})"


def _second_ok(w, region: RegionId) -> bool:
    return w is INF or in_region(w, region)


def in_Xtilde(p: ExtPoint) -> bool:
    """Domain of the H extension: closed X_j for j <= 4, open X_j for j >= 5, open W_j."""
    for j in range(1, 9):
        first = RegionId.indexed("Xbar" if j <= 4 else "X", j)
        if in_region(p.z, first) and _second_ok(p.w, RegionId.indexed("W", j)):
            return True
    return False


def in_Xhat(p: ExtPoint) -> bool:
    """Domain of the T extension: closed X_j times closed W_j (or infinity)."""
    for j in range(1, 9):
        if in_region(p.z, RegionId.indexed("Xbar", j)) and _second_ok(p.w, RegionId.indexed("Wbar", j)):
            return True
    return False


def _domain_check(algorithm: Algorithm):
    if algorithm is Algorithm.H:
        return in_Xtilde
    if algorithm is Algorithm.T:
        return in_Xhat
    raise ValueError("the natural extension is defined for H and T")


def step_problems(p: ExtPoint, q: ExtPoint, algorithm) -> list[str]:
    """Exact post-conditions of one extension step ``p -> q``.

    Checks domain preservation and, when ``w`` is infinite or ``|w| > 1``,
    that ``w'`` lies in the dual cell S_{-a} (the closed domain of the T
    extension also admits ``|w| = 1``, outside the hypothesis of that claim).
    """
    algorithm = Algorithm.parse(algorithm)
    problems = []
    a = 1 / p.z - q.z
    # an odd final quotient ends the orbit; S-cells exist only around even points
    lands = a.is_even() and (p.w is INF or (abs2(p.w) - 1).sign() > 0)
    if lands and not in_S_w(q.w, -a):
        problems.append(f"w' = {q.w} is not in S_{-a}")
    if not (isinstance(q.z, GaussianRational) and q.z.is_zero()) and not _domain_check(algorithm)(q):
        problems.append(f"image {q} left the domain")
    return problems


def on_excluded_boundary(p: ExtPoint, q: ExtPoint) -> bool:
    """True when the pair or its image has a coordinate on a domain boundary.

    Covered cases: a first coordinate off the open box, or a finite second
    coordinate on the unit circle.  These are the measure-zero boundary pairs
    on which the extensions need not be well defined.
    """
    for z in (p.z, q.z):
        if not in_region(z, RegionId.Xopen):
            return True
    for w in (p.w, q.w):
        if w is not INF and (abs2(w) - 1).sign() == 0:
            return True
    return False


def ext_step(p: ExtPoint, algorithm="T", check: bool = True) -> ExtPoint:
    """One step ``(z, w) -> (T(z), 1/w - a(z))`` with ``1/inf = 0``.

    With ``check`` every failed post-condition of :func:`step_problems`
    raises VerificationError.
    """
    algorithm = Algorithm.parse(algorithm)
    _domain_check(algorithm)
    if isinstance(p.z, GaussianRational) and p.z.is_zero():
        raise DomainError("extension step at z = 0")
    a, z_next = step(p.z, algorithm)
    w_next = -a if p.w is INF else 1 / p.w - a
    q = ExtPoint(z_next, w_next)
    if check:
        problems = step_problems(p, q, algorithm)
        if problems:
            raise VerificationError(f"at {p}: " + "; ".join(problems))
    return q


def ext_orbit_period(p: ExtPoint, algorithm, max_steps: int = 10000) -> int | None:
    """Smallest m >= 1 with ext_step^m(p) == p, or None within the budget."""
    q = p
    for m in range(1, max_steps + 1):
        q = ext_step(q, algorithm)
        if q == p:
            return m
    return None


def density_identity_check(z: GaussianRational, w, algorithm="T") -> bool | None:
    """Exact change-of-variables identity for the density 1/|z - w|^4.

    Checks ``|z' - w'|^4 * |z|^4 * |w|^4 == |z - w|^4`` with ``(z', w')`` the
    image pair.  Returns None for ``w = inf`` where the density is not stated.
    """
    if w is INF:
        return None
    z = GaussianRational.from_parts(z) if not isinstance(z, GaussianRational) else z
    if not isinstance(w, GaussianRational):
        raise TypeError("density_identity_check needs rational pairs")
    if z.is_zero() or w.is_zero():
        raise DomainError("density identity needs z != 0 and w != 0")
    if z == w:
        raise DomainError("z = w is a pole of the density")
    p = ext_step(ExtPoint(z, w), algorithm, check=False)
    lhs = (p.z - p.w).norm() ** 2 * z.norm() ** 2 * w.norm() ** 2
    return lhs == (z - w).norm() ** 2


@dataclass(frozen=True)
class CollisionReport:
    checked: int
    collisions: tuple[tuple[ExtPoint, ExtPoint, ExtPoint], ...]

    @property
    def ok(self) -> bool:
        return not self.collisions


def injectivity_sample(pairs, algorithm="H") -> CollisionReport:
    """Map every pair once and report distinct inputs sharing an image."""
    images: dict = {}
    collisions = []
    distinct = list(dict.fromkeys(pairs))
    for p in distinct:
        q = ext_step(p, algorithm)
        prev = images.setdefault(q, p)
        if prev != p:
            collisions.append((prev, p, q))
    return CollisionReport(len(distinct), tuple(collisions))
