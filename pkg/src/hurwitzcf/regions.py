"""Exact geometry: the box X, the Q_w and S_w tilings, floors, and the region atlas.

Points are located in *lattice coordinates* ``z = u(1+i) + v(1-i)``, i.e.
``u = (Re z + Im z)/2`` and ``v = (Re z - Im z)/2``.  The even Gaussian
integers (1+i)Z[i] are exactly the points with integral (u, v).  Every
comparison is decided by :func:`~hurwitzcf.exactnum.real_sign`, so boundary
points are classified exactly.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import AlgebraicReal, FieldElement, FieldType, QuadraticElement, _type_a_bounds, abs2, im_part, re_part
from .gaussian import GaussianRational, as_gaussian, gaussian_int

__all__ = [
    "Coord",
    "LClass",
    "RegionId",
    "coords",
    "floor_H",
    "floor_T",
    "floor_dual",
    "i_power",
    "in_Q_w",
    "in_S_w",
    "in_region",
    "l_class",
    "lattice_coords",
    "lattice_point",
    "locate",
    "unit_circle_sign",
]

HALF = Fraction(1, 2)

_I_POWERS = (gaussian_int(1), gaussian_int(0, 1), gaussian_int(-1), gaussian_int(0, -1))


def i_power(k: int) -> GaussianRational:
    return _I_POWERS[k % 4]


@dataclass(frozen=True)
class Coord:
    u: AlgebraicReal
    v: AlgebraicReal

    def rotate(self, k: int) -> Coord:
        """Coordinates of ``z * i^k``; multiplying by i sends (u, v) to (v, -u)."""
        u, v = self.u, self.v
        for _ in range(k % 4):
            u, v = v, -u
        return Coord(u, v)


def coords(z: FieldElement) -> Coord:
    re, im = re_part(z), im_part(z)
    return Coord((re + im).scale(HALF), (re - im).scale(HALF))


def lattice_point(M: int, L: int) -> GaussianRational:
    """The even Gaussian integer M(1+i) + L(1-i)."""
    return gaussian_int(M + L, M - L)


def lattice_coords(w: GaussianRational) -> tuple[int, int]:
    if not w.is_even():
        raise ValueError(f"{w} is not in (1+i)Z[i]")
    a, b = w.re_num, w.im_num
    return (a + b) // 2, (a - b) // 2


# ---------------------------------------------------------------------------
# L-classes


@dataclass(frozen=True)
class LClass:
    """``L(i^k (1+i))`` when ``diagonal`` else ``L(i^k * 2)``."""

    diagonal: bool
    k: int

    @property
    def generator(self) -> GaussianRational:
        base = gaussian_int(1, 1) if self.diagonal else gaussian_int(2)
        return base * i_power(self.k)

    def __str__(self):
        return f"L({self.generator})"


def l_class(w: GaussianRational) -> LClass:
    """The L-class of a nonzero element of (1+i)Z[i]."""
    if w.is_zero():
        raise ValueError("0 belongs to no L-class")
    M, L = lattice_coords(w)
    if L == 0:
        return LClass(True, 0 if M > 0 else 2)
    if M == 0:
        return LClass(True, 1 if L < 0 else 3)
    if M > 0:
        return LClass(False, 0 if L > 0 else 1)
    return LClass(False, 2 if L < 0 else 3)


# ---------------------------------------------------------------------------
# tilings


def _in_open_closed(x: AlgebraicReal, lo_open: bool) -> bool:
    """-1/2 < x <= 1/2 (or -1/2 <= x <= 1/2 when ``lo_open`` is False)."""
    lo = (x + HALF).sign()
    if lo < 0 or (lo == 0 and lo_open):
        return False
    return (x - HALF).sign() <= 0


def _frame(c: Coord, w: GaussianRational) -> tuple[Coord, LClass | None]:
    M, L = lattice_coords(w)
    rel = Coord(c.u - M, c.v - L)
    if w.is_zero():
        return rel, None
    cls = l_class(w)
    # the edge lists are written for the frame rotated by i^-k
    return rel.rotate(-cls.k), cls


def _in_Q(c: Coord, w: GaussianRational) -> bool:
    rel, cls = _frame(c, w)
    if cls is None:
        return _in_open_closed(rel.u, False) and _in_open_closed(rel.v, False)
    if cls.diagonal:
        return _in_open_closed(rel.u, True) and _in_open_closed(rel.v, False)
    return _in_open_closed(rel.u, True) and _in_open_closed(rel.v, True)


def in_Q_w(z: FieldElement, w: GaussianRational) -> bool:
    """Membership in the quadrilateral Q_w of the Hurwitz tiling (w = 0 or even)."""
    if not (w.is_zero() or w.is_even()):
        raise ValueError(f"{w} is not in (1+i)Z[i]")
    return _in_Q(coords(z), w)


def _dist2_sign(z: FieldElement, center, r2) -> int:
    """Sign of |z - center|^2 - r2."""
    if isinstance(z, GaussianRational):
        d = z - center
        r2 = Fraction(r2)
        lhs = (d.re_num * d.re_num + d.im_num * d.im_num) * r2.denominator
        rhs = r2.numerator * d.den * d.den
        return (lhs > rhs) - (lhs < rhs)
    fast = _dist2_sign_certified(z, as_gaussian(center), Fraction(r2))
    if fast is not None:
        return fast
    return (abs2(z - center) - r2).sign()


def unit_circle_sign(z: FieldElement) -> int:
    """Sign of |z|^2 - 1."""
    return _dist2_sign(z, 0, 1)


def _sq_bounds(lo: int, hi: int) -> tuple[int, int]:
    if lo >= 0:
        return lo * lo, hi * hi
    if hi <= 0:
        return hi * hi, lo * lo
    return 0, max(lo * lo, hi * hi)


def _dist2_sign_certified(z: QuadraticElement, c: GaussianRational, r2: Fraction) -> int | None:
    """Sign of |z - c|^2 - r2 from integer enclosures of Re z and Im z, or None if undecided."""
    x, y = z.x, z.y
    a, b, d1 = x.re_num, x.im_num, x.den
    cc, e, d2 = y.re_num, y.im_num, y.den
    s_lo, s_hi, t_lo, t_hi, E = _sigma_tau_bounds(z.field, _LOCATE_PREC)
    scale = E << _LOCATE_PREC
    k = scale * d1 * d2 * c.den

    def enclose(const, cs, ct):
        lo = hi = const
        for coef, b_lo, b_hi in ((cs, s_lo, s_hi), (ct, t_lo, t_hi)):
            if coef >= 0:
                lo += coef * b_lo
                hi += coef * b_hi
            else:
                lo += coef * b_hi
                hi += coef * b_lo
        return lo, hi

    # k (Re z - Re c) and k (Im z - Im c) as integer intervals
    re_lo, re_hi = enclose((a * d2 * c.den - c.re_num * d1 * d2) * scale, cc * d1 * c.den, -e * d1 * c.den)
    im_lo, im_hi = enclose((b * d2 * c.den - c.im_num * d1 * d2) * scale, e * d1 * c.den, cc * d1 * c.den)
    r_lo, r_hi = _sq_bounds(re_lo, re_hi)
    i_lo, i_hi = _sq_bounds(im_lo, im_hi)
    target = r2.numerator * k * k
    if (r_lo + i_lo) * r2.denominator > target:
        return 1
    if (r_hi + i_hi) * r2.denominator < target:
        return -1
    return None


def in_S_w(z: FieldElement, w: GaussianRational) -> bool:
    """Membership in the disk cell S_w of the dual tiling (w = 0 or even)."""
    if not (w.is_zero() or w.is_even()):
        raise ValueError(f"{w} is not in (1+i)Z[i]")
    if _dist2_sign(z, w, 1) >= 0:
        return False
    if w.is_zero():
        return True
    cls = l_class(w)
    rot = i_power(cls.k)
    if _dist2_sign(z, w - rot * gaussian_int(1, 1), 1) < 0:
        return False
    if not cls.diagonal and _dist2_sign(z, w - rot * gaussian_int(1, -1), 1) < 0:
        return False
    return True


def _nearest(c: Coord) -> tuple[int, int]:
    return (c.u + HALF).floor(), (c.v + HALF).floor()


def _neighbours(M0: int, L0: int):
    for dM in (-1, 0, 1):
        for dL in (-1, 0, 1):
            yield lattice_point(M0 + dM, L0 + dL)


_LOCATE_PREC = 64


def _sigma_tau_bounds(field, prec: int):
    """Integers (s_lo, s_hi, t_lo, t_hi, e) with s_lo <= 2^prec e sigma <= s_hi, same for tau."""
    if field.field_type is FieldType.A:
        (s_lo, s_hi), (t_lo, t_hi), _ = _type_a_bounds(field.m, field.n, prec)
        return s_lo, s_hi, t_lo, t_hi, 1
    g = field.unit
    sl = math.isqrt(field.l << (2 * prec))
    s_lo, s_hi = sorted((g.re_num * sl, g.re_num * (sl + 1)))
    t_lo, t_hi = sorted((g.im_num * sl, g.im_num * (sl + 1)))
    return s_lo, s_hi, t_lo, t_hi, g.den


def _round_certified(c0: int, cs: int, ct: int, den: int, bounds, prec: int):
    """Nearest integer to (c0 + cs sigma + ct tau)/den if provably not a half-integer tie."""
    s_lo, s_hi, t_lo, t_hi, e = bounds
    k = den * e << prec
    lo = hi = c0 * e << prec
    for c, b_lo, b_hi in ((cs, s_lo, s_hi), (ct, t_lo, t_hi)):
        if c >= 0:
            lo += c * b_lo
            hi += c * b_hi
        else:
            lo += c * b_hi
            hi += c * b_lo
    # x in [lo/k, hi/k]; round half-up is floor((2x + 1)/2)
    a, r = divmod(2 * lo + k, 2 * k)
    if r == 0 or a != (2 * hi + k) // (2 * k):
        return None
    return a


def locate(z: FieldElement) -> tuple[int, int] | None:
    """(M, L) with z strictly inside the open box around M(1+i) + L(1-i), or None.

    Decided by certified integer enclosures; None means z may sit on a cell edge.
    """
    if isinstance(z, GaussianRational):
        M = _round_certified(z.re_num + z.im_num, 0, 0, 2 * z.den, (0, 0, 0, 0, 1), 0)
        L = _round_certified(z.re_num - z.im_num, 0, 0, 2 * z.den, (0, 0, 0, 0, 1), 0)
        return None if M is None or L is None else (M, L)
    x, y = z.x, z.y
    a, b, d1 = x.re_num, x.im_num, x.den
    c, e, d2 = y.re_num, y.im_num, y.den
    # 2 d1 d2 u = (a+b) d2 + (c+e) d1 sigma + (c-e) d1 tau, and similarly for v
    den = 2 * d1 * d2
    bounds = _sigma_tau_bounds(z.field, _LOCATE_PREC)
    M = _round_certified((a + b) * d2, (c + e) * d1, (c - e) * d1, den, bounds, _LOCATE_PREC)
    if M is None:
        return None
    L = _round_certified((a - b) * d2, (c - e) * d1, -(c + e) * d1, den, bounds, _LOCATE_PREC)
    if L is None:
        return None
    return M, L


def floor_T(z: FieldElement) -> GaussianRational:
    """Tanaka's floor: round both lattice coordinates half-up."""
    loc = locate(z)
    if loc is not None:
        return lattice_point(*loc)
    M, L = _nearest(coords(z))
    return lattice_point(M, L)


def floor_H(z: FieldElement) -> GaussianRational:
    """J. Hurwitz's floor: z itself on Z[i], otherwise the w with z in Q_w."""
    if isinstance(z, GaussianRational) and z.is_integer():
        return z
    loc = locate(z)
    if loc is not None:
        return lattice_point(*loc)
    c = coords(z)
    M0, L0 = _nearest(c)
    # strictly inside the translated box: no tiling convention involved
    if (c.u - M0 + HALF).sign() > 0 and (c.v - L0 + HALF).sign() > 0:
        return lattice_point(M0, L0)
    hits = [w for w in _neighbours(M0, L0) if _in_Q(c, w)]
    if len(hits) != 1:
        raise AssertionError(f"Q-tiling is not a partition at {z}: {hits}")
    return hits[0]


def floor_dual(z: FieldElement) -> GaussianRational:
    """The dual floor: z itself on Z[i], otherwise the w with z in S_w."""
    if isinstance(z, GaussianRational) and z.is_integer():
        return z
    loc = locate(z)
    M0, L0 = loc if loc is not None else _nearest(coords(z))
    hits = [w for w in _neighbours(M0, L0) if in_S_w(z, w)]
    if len(hits) != 1:
        raise AssertionError(f"S-tiling is not a partition at {z}: {hits}")
    return hits[0]


# ---------------------------------------------------------------------------
# region atlas


class RegionId(enum.Enum):
    X = "X"
    Xopen = "Xopen"
    Xclosure = "Xclosure"
    UnitDiskComplement = "D"
    X1, X2, X3, X4, X5, X6, X7, X8 = (f"X{j}" for j in range(1, 9))
    Xbar1, Xbar2, Xbar3, Xbar4, Xbar5, Xbar6, Xbar7, Xbar8 = (f"Xbar{j}" for j in range(1, 9))
    W1, W2, W3, W4, W5, W6, W7, W8 = (f"W{j}" for j in range(1, 9))
    Wbar1, Wbar2, Wbar3, Wbar4, Wbar5, Wbar6, Wbar7, Wbar8 = (f"Wbar{j}" for j in range(1, 9))
    K1, K2, K3, K4 = (f"K{j}" for j in range(1, 5))
    Kp1, Kp2, Kp3, Kp4 = (f"K'{j}" for j in range(1, 5))
    Y1, Y2, Y3, Y4 = (f"Y{j}" for j in range(1, 5))
    Yp1, Yp2, Yp3, Yp4 = (f"Y'{j}" for j in range(1, 5))
    # the opposite ray of the Y_j line beyond the segment (s >= 1)
    Ypp1, Ypp2, Ypp3, Ypp4 = (f"Y''{j}" for j in range(1, 5))

    @classmethod
    def indexed(cls, prefix: str, j: int) -> RegionId:
        return cls[f"{prefix}{j}"]

    def __str__(self):
        return self.value


def _box(z: FieldElement, lo_closed: bool, hi_closed: bool) -> bool:
    if isinstance(z, GaussianRational):
        # 2 den u = a + b and 2 den v = a - b, compared with -den and den
        d = z.den
        for x in (z.re_num + z.im_num, z.re_num - z.im_num):
            if x < -d or (x == -d and not lo_closed):
                return False
            if x > d or (x == d and not hi_closed):
                return False
        return True
    c = coords(z)
    for x in (c.u, c.v):
        lo = (x + HALF).sign()
        hi = (x - HALF).sign()
        if lo < 0 or (lo == 0 and not lo_closed):
            return False
        if hi > 0 or (hi == 0 and not hi_closed):
            return False
    return True


_R2_HALF = Fraction(1, 2)  # squared radius sqrt(2)/2


def _x_sector(z: FieldElement, j: int, closed: bool) -> bool:
    if not _box(z, True, closed):
        return False
    if j <= 4:
        for k in range(3):
            center = i_power(k + j - 1) * GaussianRational(1, 1, 2)
            s = _dist2_sign(z, center, _R2_HALF)
            if s < 0 or (s == 0 and not closed):
                return False
        return True
    jj = j - 4
    for k in range(2):
        center = i_power(k + jj - 1) * GaussianRational(1, -1, 2)
        s = _dist2_sign(z, center, _R2_HALF)
        if s > 0 or (s == 0 and not closed):
            return False
    return True


def _w_sector(z: FieldElement, j: int, closed: bool) -> bool:
    s = _dist2_sign(z, 0, 1)
    if s < 0 or (s == 0 and not closed):
        return False
    ks = (0,) if j <= 4 else (0, 1)
    jj = j if j <= 4 else j - 4
    for k in ks:
        if _dist2_sign(z, i_power(k + jj - 1) * gaussian_int(1, -1), 1) < 0:
            return False
    return True


def _k_arc(z: FieldElement, j: int, inner: bool) -> bool:
    center = i_power(j - 1) * GaussianRational(1, -1, 2)
    if _dist2_sign(z, center, _R2_HALF) != 0:
        return False
    s = _dist2_sign(z, 0, 1)
    return s <= 0 if inner else s > 0


def _y_segment(z: FieldElement, j: int, part: str) -> bool:
    # i^{j-1}(s - it) with s + t = 1: rotate back so that Re = s, Im = -t
    w = z * i_power(-(j - 1))
    s = re_part(w)
    if (s - im_part(w) - 1).sign() != 0:
        return False
    if part == "segment":
        return s.sign() >= 0 and (s - 1).sign() <= 0
    if part == "near":
        return s.sign() <= 0
    return (s - 1).sign() >= 0


def _build_predicates():
    preds = {
        RegionId.X: lambda z: _box(z, True, False),
        RegionId.Xopen: lambda z: _box(z, False, False),
        RegionId.Xclosure: lambda z: _box(z, True, True),
        RegionId.UnitDiskComplement: lambda z: _dist2_sign(z, 0, 1) >= 0,
    }
    for j in range(1, 9):
        preds[RegionId.indexed("X", j)] = lambda z, j=j: _x_sector(z, j, False)
        preds[RegionId.indexed("Xbar", j)] = lambda z, j=j: _x_sector(z, j, True)
        preds[RegionId.indexed("W", j)] = lambda z, j=j: _w_sector(z, j, False)
        preds[RegionId.indexed("Wbar", j)] = lambda z, j=j: _w_sector(z, j, True)
    for j in range(1, 5):
        preds[RegionId.indexed("K", j)] = lambda z, j=j: _k_arc(z, j, True)
        preds[RegionId.indexed("Kp", j)] = lambda z, j=j: _k_arc(z, j, False)
        preds[RegionId.indexed("Y", j)] = lambda z, j=j: _y_segment(z, j, "segment")
        preds[RegionId.indexed("Yp", j)] = lambda z, j=j: _y_segment(z, j, "near")
        preds[RegionId.indexed("Ypp", j)] = lambda z, j=j: _y_segment(z, j, "far")
    return preds


_PREDICATES = _build_predicates()


def in_region(z: FieldElement, region: RegionId) -> bool:
    """Exact membership of ``z`` (never infinity) in a named region."""
    return _PREDICATES[region](z)
