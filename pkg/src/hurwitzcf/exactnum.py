"""Exact arithmetic over Q(i) and Q(i, sqrt(m+ni)).

Elements of a quadratic extension are stored as ``x + y*sqrt(D)`` with
``x, y`` in Q(i) and ``sqrt(D)`` the principal square root (positive real
part, or zero real part and positive imaginary part).

Every geometric predicate downstream reduces to the sign of a real number of
the form ``c0 + cs*sigma + ct*tau + cn*sqrt(N)`` where ``sigma + i*tau`` is
``sqrt(D)`` and ``N = m^2 + n^2``.  :class:`AlgebraicReal` holds such numbers
and decides their sign exactly.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .gaussian import ONE, ZERO, GaussianRational, as_gaussian, gaussian_int

__all__ = [
    "AlgebraicReal",
    "BiquadExpr",
    "CertifiedApprox",
    "ContractViolation",
    "FieldElement",
    "FieldMismatch",
    "FieldType",
    "INF",
    "QuadraticElement",
    "QuadraticField",
    "abs2",
    "elem_arith",
    "embed",
    "galois_conjugate",
    "gaussian_sqrt",
    "im_part",
    "is_rational",
    "make_field",
    "rationally_dependent",
    "re_part",
    "real_sign",
    "sqrt_element",
]


class FieldMismatch(ValueError):
    """Operands live in different quadratic extensions."""


class ContractViolation(ValueError):
    """A caller broke a documented precondition (e.g. non-real input to real_sign)."""


class _Infinity:
    """The point at infinity of the Riemann sphere."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    __str__ = __repr__

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def gaussian_sqrt(d: GaussianRational) -> GaussianRational | None:
    """Return the principal square root of a Gaussian integer when it is a square in Z[i]."""
    if not d.is_integer():
        raise ValueError(f"{d} is not a Gaussian integer")
    m, n = d.re_num, d.im_num
    norm = m * m + n * n
    k = math.isqrt(norm)
    if k * k != norm:
        return None
    a2, b2 = (k + m), (k - m)
    if a2 % 2 or b2 % 2:
        return None
    a, b = math.isqrt(a2 // 2), math.isqrt(b2 // 2)
    if a * a != a2 // 2 or b * b != b2 // 2:
        return None
    if n < 0:
        b = -b
    root = gaussian_int(a, b)
    if root * root != d:
        return None
    # principal branch: positive real part, or zero real part and positive imaginary part
    if a < 0 or (a == 0 and b < 0):
        root = -root
    return root


class FieldType(enum.Enum):
    A = "A"
    B = "B"


@dataclass(frozen=True)
class QuadraticField:
    """Descriptor of Q(i, sqrt(m+ni)); build it with :func:`make_field`.

    For type B fields ``sqrt(m+ni) == unit * sqrt(l)`` holds exactly, with
    ``l`` a positive non-square integer and ``unit`` in Q(i).
    """

    m: int
    n: int
    field_type: FieldType = field(compare=False)
    l: int | None = field(default=None, compare=False)
    unit: GaussianRational | None = field(default=None, compare=False)

    @property
    def radicand(self) -> GaussianRational:
        return gaussian_int(self.m, self.n)

    @property
    def norm(self) -> int:
        return self.m * self.m + self.n * self.n

    def __repr__(self):
        return f"QuadraticField({self.m}, {self.n})"

    def __str__(self):
        return f"Q(i, sqrt({self.radicand}))"


@lru_cache(maxsize=None)
def make_field(m: int, n: int) -> QuadraticField:
    """Classify Q(i, sqrt(m+ni)) as type A or B.

    Raises ``ValueError`` when ``m+ni`` is a square in Z[i].
    """
    d = gaussian_int(m, n)
    if gaussian_sqrt(d) is not None:
        raise ValueError(f"{d} is a square in Z[i]")
    norm = m * m + n * n
    k = math.isqrt(norm)
    if k * k != norm:
        return QuadraticField(m, n, FieldType.A)
    if n == 0:
        l = abs(m)
        unit = ONE if m > 0 else gaussian_int(0, 1)
    else:
        # (D + k)^2 = D * 2(k + m), so sqrt(D) = (D + k)/(2(k + m)) * sqrt(2(k + m))
        l = 2 * (k + m)
        unit = (d + k) / l
    if unit * unit * l != d:
        raise AssertionError(f"type-B factorisation failed for {d}")
    if math.isqrt(l) ** 2 == l:
        raise AssertionError(f"l = {l} is a perfect square for {d}")
    return QuadraticField(m, n, FieldType.B, l, unit)


# ---------------------------------------------------------------------------
# quadratic elements


class QuadraticElement:
    """``x + y*sqrt(D)`` with ``y != 0``; see :func:`quad` for the demoting constructor."""

    __slots__ = ("field", "x", "y", "_hash")

    def __init__(self, field: QuadraticField, x, y):
        x, y = as_gaussian(x), as_gaussian(y)
        if y.is_zero():
            raise ValueError("QuadraticElement requires a nonzero sqrt coefficient; use quad()")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("QuadraticElement is immutable")

    def _check(self, other):
        if isinstance(other, QuadraticElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.x, other.y
        if isinstance(other, (GaussianRational, int, Fraction)):
            return as_gaussian(other), ZERO
        return None

    def __add__(self, other):
        parts = self._check(other)
        if parts is None:
            return NotImplemented
        return quad(self.field, self.x + parts[0], self.y + parts[1])

    __radd__ = __add__

    def __neg__(self):
        return QuadraticElement(self.field, -self.x, -self.y)

    def __sub__(self, other):
        parts = self._check(other)
        if parts is None:
            return NotImplemented
        return quad(self.field, self.x - parts[0], self.y - parts[1])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        parts = self._check(other)
        if parts is None:
            return NotImplemented
        x2, y2 = parts
        if y2.is_zero():
            return quad(self.field, self.x * x2, self.y * x2)
        d = self.field.radicand
        return quad(self.field, self.x * x2 + self.y * y2 * d, self.x * y2 + self.y * x2)

    __rmul__ = __mul__

    def reciprocal(self):
        # (x + y s)(x - y s) = x^2 - y^2 D, nonzero since D is not a square
        den = self.x * self.x - self.y * self.y * self.field.radicand
        inv = den.reciprocal()
        return QuadraticElement(self.field, self.x * inv, -self.y * inv)

    def __truediv__(self, other):
        if isinstance(other, QuadraticElement):
            return self * other.reciprocal()
        parts = self._check(other)
        if parts is None:
            return NotImplemented
        inv = parts[0].reciprocal()
        return QuadraticElement(self.field, self.x * inv, self.y * inv)

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def conjugate(self):
        """Galois conjugate over Q(i): sqrt(D) -> -sqrt(D)."""
        return QuadraticElement(self.field, self.x, -self.y)

    def __eq__(self, other):
        if isinstance(other, QuadraticElement):
            return self.field == other.field and self.x == other.x and self.y == other.y
        if isinstance(other, (GaussianRational, int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.field.m, self.field.n, self.x, self.y))
            object.__setattr__(self, "_hash", h)
        return h

    def __complex__(self):
        return complex(embed(self, 60).midpoint())

    def __repr__(self):
        return f"QuadraticElement({self.field!r}, {self.x!r}, {self.y!r})"

    def __str__(self):
        root = f"sqrt({self.field.radicand})"
        y = self.y
        if y == 1:
            term = root
        elif y == -1:
            term = f"-{root}"
        else:
            term = f"({y})*{root}"
        if self.x.is_zero():
            return term
        sign = "" if term.startswith("-") else "+"
        return f"{_paren(self.x)}{sign}{term}"


def _paren(g: GaussianRational) -> str:
    s = str(g)
    if g.re_num != 0 and g.im_num != 0 and g.den == 1:
        return f"({s})"
    return s


FieldElement = Union[GaussianRational, QuadraticElement]


def quad(field: QuadraticField, x, y) -> FieldElement:
    """Build ``x + y*sqrt(D)``, demoting to a GaussianRational when ``y == 0``."""
    y = as_gaussian(y)
    if y.is_zero():
        return as_gaussian(x)
    return QuadraticElement(field, x, y)


def sqrt_element(m: int, n: int) -> FieldElement:
    """The principal square root of m+ni, exact (a Gaussian integer when m+ni is a square)."""
    root = gaussian_sqrt(gaussian_int(m, n))
    if root is not None:
        return root
    return QuadraticElement(make_field(m, n), ZERO, ONE)


def is_rational(z) -> bool:
    return isinstance(z, GaussianRational)


def field_of(*values) -> QuadraticField | None:
    found = None
    for v in values:
        if isinstance(v, QuadraticElement):
            if found is None:
                found = v.field
            elif v.field != found:
                raise FieldMismatch(f"{found} vs {v.field}")
    return found


def elem_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Apply one of ``+ - * /`` to two field elements."""
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        if isinstance(b, GaussianRational) and b.is_zero():
            raise ZeroDivisionError("division by zero")
        return a / b
    raise ValueError(f"unknown operator {op!r}")


def galois_conjugate(a: FieldElement) -> QuadraticElement:
    if not isinstance(a, QuadraticElement):
        raise ValueError(f"{a} is in Q(i): no nontrivial conjugate")
    return a.conjugate()


# ---------------------------------------------------------------------------
# real quantities


class AlgebraicReal:
    """The real number ``c0 + cs*sigma + ct*tau + cn*sqrt(N)``.

    ``sigma`` and ``tau`` are the real and imaginary parts of the principal
    ``sqrt(D)`` of ``field``; ``field is None`` means a plain rational.
    """

    __slots__ = ("field", "c0", "cs", "ct", "cn")

    def __init__(self, field: QuadraticField | None, c0=0, cs=0, ct=0, cn=0):
        self.field = field
        self.c0 = Fraction(c0)
        self.cs = Fraction(cs)
        self.ct = Fraction(ct)
        self.cn = Fraction(cn)

    @classmethod
    def rational(cls, value) -> AlgebraicReal:
        return cls(None, value)

    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c0, self.cs, self.ct, self.cn)

    def is_rational_form(self) -> bool:
        return self.field is None or not (self.cs or self.ct or self.cn)

    def _join(self, other):
        if isinstance(other, AlgebraicReal):
            if self.field is None:
                return other.field, other
            if other.field is not None and other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return self.field, other
        return self.field, AlgebraicReal(None, other)

    def __add__(self, other):
        f, o = self._join(other)
        return AlgebraicReal(f, self.c0 + o.c0, self.cs + o.cs, self.ct + o.ct, self.cn + o.cn)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicReal(self.field, -self.c0, -self.cs, -self.ct, -self.cn)

    def __sub__(self, other):
        f, o = self._join(other)
        return AlgebraicReal(f, self.c0 - o.c0, self.cs - o.cs, self.ct - o.ct, self.cn - o.cn)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k) -> AlgebraicReal:
        k = Fraction(k)
        return AlgebraicReal(self.field, self.c0 * k, self.cs * k, self.ct * k, self.cn * k)

    def __mul__(self, k):
        if isinstance(k, (int, Fraction)):
            return self.scale(k)
        return NotImplemented

    __rmul__ = __mul__

    def sign(self) -> int:
        return real_sign(self)

    def interval(self, prec: int) -> tuple[Fraction, Fraction]:
        """Certified enclosure [lo, hi] with endpoints of denominator dividing den*2^prec."""
        return _interval(self, prec)

    def floor(self) -> int:
        if self.is_rational_form():
            return math.floor(self.c0)
        lo, hi = self.interval(64)
        f = math.floor(hi)
        if math.floor(lo) == f:
            return f
        # hi - lo < 1, so the value lies in [f - 1, f + 1)
        return f if (self - f).sign() >= 0 else f - 1

    def __repr__(self):
        return f"AlgebraicReal({self.field!r}, {self.c0}, {self.cs}, {self.ct}, {self.cn})"


def re_part(z: FieldElement) -> AlgebraicReal:
    if isinstance(z, GaussianRational):
        return AlgebraicReal(None, z.real)
    x, y = z.x, z.y
    return AlgebraicReal(z.field, x.real, y.real, -y.imag, 0)


def im_part(z: FieldElement) -> AlgebraicReal:
    if isinstance(z, GaussianRational):
        return AlgebraicReal(None, z.imag)
    x, y = z.x, z.y
    return AlgebraicReal(z.field, x.imag, y.imag, y.real, 0)


def abs2(z: FieldElement) -> AlgebraicReal:
    """|z|^2 as an exact real quantity."""
    if isinstance(z, GaussianRational):
        return AlgebraicReal(None, z.norm())
    x, y = z.x, z.y
    w = x * y.conjugate()
    # |x + y s|^2 = |x|^2 + |y|^2 sqrt(N) + 2 Re(x conj(y) conj(s))
    return AlgebraicReal(z.field, x.norm(), 2 * w.real, 2 * w.imag, y.norm())


def _type_b_pair(r: AlgebraicReal) -> tuple[Fraction, Fraction, int]:
    """Rewrite a type-B quantity as p + q*sqrt(l)."""
    f = r.field
    g = f.unit
    k = math.isqrt(f.norm)
    p = r.c0 + r.cn * k
    q = r.cs * g.real + r.ct * g.imag
    return p, q, f.l


def _sign_pq_sqrt(p: Fraction, q: Fraction, l: int) -> int:
    sp = (p > 0) - (p < 0)
    sq = (q > 0) - (q < 0)
    if sq == 0:
        return sp
    if sp == 0 or sp == sq:
        return sq
    # opposite signs: compare p^2 with q^2 l
    diff = p * p - q * q * l
    return sp if diff > 0 else sq if diff < 0 else 0


@lru_cache(maxsize=4096)
def _type_a_bounds(m: int, n: int, prec: int):
    """Integer enclosures of 2^prec * (sigma, tau, sqrt(N))."""
    N = m * m + n * n
    scale = 1 << prec
    r_lo = math.isqrt(N << (2 * prec))
    r_hi = r_lo + 1
    # sigma^2 = (sqrt(N) + m)/2,  tau^2 = (sqrt(N) - m)/2, scaled by 4^prec
    s2_lo = (r_lo * scale + m * scale * scale) // 2
    s2_hi = -((-(r_hi * scale + m * scale * scale)) // 2)
    t2_lo = (r_lo * scale - m * scale * scale) // 2
    t2_hi = -((-(r_hi * scale - m * scale * scale)) // 2)
    s_lo = math.isqrt(max(s2_lo, 0))
    s_hi = math.isqrt(max(s2_hi, 0)) + 1
    t_lo = math.isqrt(max(t2_lo, 0))
    t_hi = math.isqrt(max(t2_hi, 0)) + 1
    if n < 0:
        t_lo, t_hi = -t_hi, -t_lo
    return (s_lo, s_hi), (t_lo, t_hi), (r_lo, r_hi)


def _scaled_term(c: int, bounds: tuple[int, int]) -> tuple[int, int]:
    lo, hi = bounds
    return (c * lo, c * hi) if c >= 0 else (c * hi, c * lo)


def _common_den(*fracs: Fraction) -> int:
    den = 1
    for f in fracs:
        den = den * f.denominator // math.gcd(den, f.denominator)
    return den


def _interval_int(r: AlgebraicReal, prec: int) -> tuple[int, int, int]:
    """Integers lo, hi, den with lo/(den 2^prec) <= r <= hi/(den 2^prec)."""
    den = _common_den(r.c0, r.cs, r.ct, r.cn)
    c0 = r.c0.numerator * (den // r.c0.denominator)
    scale = 1 << prec
    if r.is_rational_form():
        return c0 * scale, c0 * scale, den
    f = r.field
    cs = r.cs.numerator * (den // r.cs.denominator)
    ct = r.ct.numerator * (den // r.ct.denominator)
    cn = r.cn.numerator * (den // r.cn.denominator)
    if f.field_type is FieldType.B:
        g = f.unit
        k = math.isqrt(f.norm)
        # value * den = (c0 + cn k) + (cs Re g + ct Im g) sqrt(l); Re g, Im g share g.den
        p = c0 + cn * k
        q_num = cs * g.re_num + ct * g.im_num
        sl = math.isqrt(f.l << (2 * prec))
        lo_q, hi_q = _scaled_term(q_num, (sl, sl + 1))
        base = p * scale * g.den
        return base + lo_q, base + hi_q, den * g.den
    s_b, t_b, r_b = _type_a_bounds(f.m, f.n, prec)
    lo = hi = c0 * scale
    for c, b in ((cs, s_b), (ct, t_b), (cn, r_b)):
        if c:
            a, e = _scaled_term(c, b)
            lo += a
            hi += e
    return lo, hi, den


def _interval(r: AlgebraicReal, prec: int) -> tuple[Fraction, Fraction]:
    lo, hi, den = _interval_int(r, prec)
    scale = den << prec
    return Fraction(lo, scale), Fraction(hi, scale)


def real_sign(e) -> int:
    """Exact sign (-1, 0, +1) of an AlgebraicReal or a real-valued BiquadExpr."""
    if isinstance(e, BiquadExpr):
        e = e.to_real()
    if e.is_rational_form():
        return (e.c0 > 0) - (e.c0 < 0)
    if e.field.field_type is FieldType.B:
        return _sign_pq_sqrt(*_type_b_pair(e))
    prec = 64
    zero_tested = False
    while True:
        lo, hi, _ = _interval_int(e, prec)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        if not zero_tested:
            # {1, sigma, tau, sqrt(N)} is Q-linearly independent in type A fields
            if not (e.c0 or e.cs or e.ct or e.cn):
                return 0
            zero_tested = True
        prec *= 2


def rationally_dependent(*values: AlgebraicReal) -> bool:
    """True when 1 and the given real quantities are linearly dependent over Q.

    Exact for rational and type-A quantities (coordinates in a basis);
    type-B quantities are reduced to the basis {1, sqrt(l)}.
    """
    rows = [(Fraction(1), Fraction(0), Fraction(0), Fraction(0))]
    for v in values:
        if v.field is not None and v.field.field_type is FieldType.B:
            p, q, _ = _type_b_pair(v)
            rows.append((p, q, Fraction(0), Fraction(0)))
        else:
            rows.append(v.coords())
    return _rank(rows) < len(rows)


def _rank(rows) -> int:
    mat = [list(r) for r in rows]
    rank = 0
    ncols = len(mat[0])
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                k = mat[i][col] / mat[rank][col]
                mat[i] = [a - k * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class BiquadExpr:
    """``c0 + c_a*alpha + c_b*beta + c_ab*alpha*beta`` over Q(i).

    ``alpha`` is the principal sqrt(D) and ``beta`` its complex conjugate, so
    ``alpha*beta = sqrt(m^2+n^2)``.  This is the natural home for expressions
    mixing an element with its complex conjugate, such as Re(z) or |z|^2.
    """

    field: QuadraticField
    c0: GaussianRational = ZERO
    c_a: GaussianRational = ZERO
    c_b: GaussianRational = ZERO
    c_ab: GaussianRational = ZERO

    @classmethod
    def from_element(cls, z: FieldElement, field: QuadraticField) -> BiquadExpr:
        if isinstance(z, GaussianRational):
            return cls(field, z)
        return cls(field, z.x, z.y)

    def complex_conjugate(self) -> BiquadExpr:
        return BiquadExpr(
            self.field,
            self.c0.conjugate(),
            self.c_b.conjugate(),
            self.c_a.conjugate(),
            self.c_ab.conjugate(),
        )

    def __add__(self, other: BiquadExpr) -> BiquadExpr:
        return BiquadExpr(
            self.field,
            self.c0 + other.c0,
            self.c_a + other.c_a,
            self.c_b + other.c_b,
            self.c_ab + other.c_ab,
        )

    def __sub__(self, other: BiquadExpr) -> BiquadExpr:
        return self + other.scale(-1)

    def scale(self, k) -> BiquadExpr:
        k = as_gaussian(k)
        return BiquadExpr(self.field, self.c0 * k, self.c_a * k, self.c_b * k, self.c_ab * k)

    def __mul__(self, other: BiquadExpr) -> BiquadExpr:
        if not isinstance(other, BiquadExpr):
            return self.scale(other)
        d = self.field.radicand
        db = d.conjugate()
        nrm = self.field.norm
        a0, aa, ab, aab = self.c0, self.c_a, self.c_b, self.c_ab
        b0, ba, bb, bab = other.c0, other.c_a, other.c_b, other.c_ab
        # alpha^2 = D, beta^2 = conj(D), (alpha beta)^2 = N,
        # alpha*(alpha beta) = D beta, beta*(alpha beta) = conj(D) alpha
        c0 = a0 * b0 + aa * ba * d + ab * bb * db + aab * bab * nrm
        ca = a0 * ba + aa * b0 + (ab * bab + aab * bb) * db
        cb = a0 * bb + ab * b0 + (aa * bab + aab * ba) * d
        cab = a0 * bab + aab * b0 + aa * bb + ab * ba
        return BiquadExpr(self.field, c0, ca, cb, cab)

    def real_part(self) -> BiquadExpr:
        return (self + self.complex_conjugate()).scale(Fraction(1, 2))

    def imag_part(self) -> BiquadExpr:
        return (self - self.complex_conjugate()).scale(GaussianRational(0, -1, 2))

    def is_zero(self) -> bool:
        """Exact zero test (coordinatewise in type A, in the {1, sqrt(l)} basis in type B)."""
        if self.field.field_type is FieldType.A:
            return all(c.is_zero() for c in (self.c0, self.c_a, self.c_b, self.c_ab))
        p, q = self._type_b_coords()
        return p.is_zero() and q.is_zero()

    def _type_b_coords(self) -> tuple[GaussianRational, GaussianRational]:
        f = self.field
        g = f.unit
        k = math.isqrt(f.norm)
        # alpha = g sqrt(l), beta = conj(g) sqrt(l), alpha beta = k
        return self.c0 + self.c_ab * k, self.c_a * g + self.c_b * g.conjugate()

    def to_real(self) -> AlgebraicReal:
        f = self.field
        if f.field_type is FieldType.B:
            p, q = self._type_b_coords()
            if p.im_num or q.im_num:
                raise ContractViolation("BiquadExpr is not real")
            g = f.unit
            if g.re_num:
                return AlgebraicReal(f, p.real, q.real / g.real, 0, 0)
            return AlgebraicReal(f, p.real, 0, q.real / g.imag, 0)
        if self.c0.im_num or self.c_ab.im_num or self.c_b != self.c_a.conjugate():
            raise ContractViolation("BiquadExpr is not real")
        # c_a alpha + conj(c_a) beta = 2 Re(c_a alpha) = 2 (Re c_a sigma - Im c_a tau)
        return AlgebraicReal(f, self.c0.real, 2 * self.c_a.real, -2 * self.c_a.imag, self.c_ab.real)


# ---------------------------------------------------------------------------
# certified embedding


@dataclass(frozen=True)
class CertifiedApprox:
    """A disk of the given radius around ``mid_re + i*mid_im`` containing the true value."""

    mid_re: Fraction
    mid_im: Fraction
    radius: Fraction

    def midpoint(self) -> complex:
        return complex(float(self.mid_re), float(self.mid_im))

    def contains(self, other: CertifiedApprox) -> bool:
        """Whether the two disks overlap (their true values may coincide)."""
        dx = self.mid_re - other.mid_re
        dy = self.mid_im - other.mid_im
        r = self.radius + other.radius
        return dx * dx + dy * dy <= r * r


def embed(a: FieldElement, prec: int) -> CertifiedApprox:
    """Certified complex approximation of ``a`` with radius at most 2^-prec."""
    if prec < 1:
        raise ValueError("precision must be at least 1 bit")
    if isinstance(a, GaussianRational):
        return CertifiedApprox(a.real, a.imag, Fraction(0))
    target = Fraction(1, 1 << prec)
    re, im = re_part(a), im_part(a)
    p = prec + 4
    while True:
        rlo, rhi = re.interval(p)
        ilo, ihi = im.interval(p)
        radius = (rhi - rlo) / 2 + (ihi - ilo) / 2
        if radius <= target:
            return CertifiedApprox((rlo + rhi) / 2, (ilo + ihi) / 2, radius)
        p *= 2
