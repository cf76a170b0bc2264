"""Exact scalars: rationals and the real quadratic fields Q(sqrt d).

Rationals are plain :class:`fractions.Fraction` values.  :class:`QuadExt`
represents ``a + b*sqrt(d)`` with ``d`` squarefree; values with ``b == 0`` are
stored with ``d == 1`` so that equality is structural.  Mixing two different
radicands is an error rather than a coercion: every group handled by the
package needs at most one radical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

from .errors import IncompatibleRadicand, NegativeInput, ZeroDivision

Rational = Fraction

Scalar = Union[int, Fraction, "QuadExt"]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/2"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip().replace("−", "-")
        return Fraction(s)
    if isinstance(x, QuadExt) and x.b == 0:
        return x.a
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Return ``(s, d)`` with ``n == s*s*d`` and ``d`` squarefree (n > 0)."""
    if n <= 0:
        raise ValueError("squarefree_decompose needs a positive integer")
    s, d = 1, 1
    rest = n
    p = 2
    while p * p <= rest:
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            d *= p
        p += 1 if p == 2 else 2
    d *= rest
    return s, d


@dataclass(frozen=True, slots=True)
class QuadExt:
    """The real number ``a + b*sqrt(d)``."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    d: int = 1

    def __post_init__(self):
        a = as_rational(self.a)
        b = as_rational(self.b)
        d = int(self.d)
        if d < 1:
            raise ValueError(f"radicand must be a positive integer, got {d}")
        if b and d > 1:
            s, d = squarefree_decompose(d)
            b *= s
        if not b:
            d = 1
        elif d == 1:
            a, b = a + b, Fraction(0)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    @classmethod
    def coerce(cls, x) -> "QuadExt":
        if isinstance(x, QuadExt):
            return x
        return cls(as_rational(x))

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def _radicand_with(self, other: "QuadExt") -> int:
        if other.b == 0:
            return self.d
        if self.b == 0 or self.d == other.d:
            return other.d
        raise IncompatibleRadicand(f"cannot combine sqrt({self.d}) with sqrt({other.d})")

    def __add__(self, other):
        try:
            o = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        d = self._radicand_with(o)
        return QuadExt(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        d = self._radicand_with(o)
        return QuadExt(self.a * o.a + self.b * o.b * d, self.a * o.b + o.a * self.b, d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExt":
        """Galois conjugate ``a - b*sqrt(d)``."""
        return QuadExt(self.a, -self.b, self.d)

    def field_norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def __truediv__(self, other):
        try:
            o = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        self._radicand_with(o)
        n = o.field_norm()
        if n == 0:
            raise ZeroDivision("division by zero in Q(sqrt d)")
        num = self * o.conjugate()
        return QuadExt(num.a / n, num.b / n, num.d)

    def __rtruediv__(self, other):
        return QuadExt.coerce(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = QuadExt(1)
        for _ in range(k):
            out = out * self
        return out

    def sign(self) -> int:
        """Exact sign of ``a + b*sqrt(d)``."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with b^2 d
        diff = self.a * self.a - self.b * self.b * self.d
        return sa if diff > 0 else sb

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.a == other.a and self.b == other.b and self.d == other.d
        try:
            q = as_rational(other)
        except TypeError:
            return NotImplemented
        return self.b == 0 and self.a == q

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        return quad_compare_real(self, other) < 0

    def __le__(self, other):
        return quad_compare_real(self, other) <= 0

    def __gt__(self, other):
        return quad_compare_real(self, other) > 0

    def __ge__(self, other):
        return quad_compare_real(self, other) >= 0

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        rad = f"{self.b}*sqrt({self.d})"
        if self.a == 0:
            return rad
        return f"{self.a} + {rad}" if self.b > 0 else f"{self.a} - {-self.b}*sqrt({self.d})"

    def to_json(self) -> dict:
        return {"a": rational_to_json(self.a), "b": rational_to_json(self.b), "d": self.d}

    @classmethod
    def from_json(cls, obj) -> "QuadExt":
        return cls(rational_from_json(obj["a"]), rational_from_json(obj["b"]), int(obj["d"]))


def rational_to_json(q) -> str:
    q = as_rational(q)
    return f"{q.numerator}/{q.denominator}"


def rational_from_json(s: str) -> Fraction:
    return Fraction(s)


def quad_mul(x: QuadExt, y: QuadExt) -> QuadExt:
    return QuadExt.coerce(x) * QuadExt.coerce(y)


def quad_compare_real(x, y) -> int:
    """-1, 0 or 1 as ``x`` is less than, equal to or greater than ``y``."""
    return (QuadExt.coerce(x) - QuadExt.coerce(y)).sign()


def sqrt_rational(q) -> QuadExt:
    """Exact square root of a non-negative rational as ``r*sqrt(d)``."""
    q = as_rational(q)
    if q < 0:
        raise NegativeInput(f"sqrt of negative rational {q}")
    if q == 0:
        return QuadExt(0)
    s, d = squarefree_decompose(q.numerator * q.denominator)
    return QuadExt(0, Fraction(s, q.denominator), d)


def quad_sqrt(x) -> QuadExt:
    """Square root of a non-negative element of Q(sqrt d), inside the same field.

    Rational inputs may open a new radicand (see :func:`sqrt_rational`).
    Raises :class:`IncompatibleRadicand` when the root lies outside Q(sqrt d).
    """
    x = QuadExt.coerce(x)
    if x.sign() < 0:
        raise NegativeInput(f"sqrt of negative number {x}")
    if x.b == 0:
        return sqrt_rational(x.a)
    # (u + v sqrt d)^2 = x  <=>  u^2 + d v^2 = a, 2uv = b
    disc = x.field_norm()
    if disc < 0:
        raise IncompatibleRadicand(f"sqrt({x}) is not in Q(sqrt {x.d})")
    r = sqrt_rational(disc)
    if not r.is_rational:
        raise IncompatibleRadicand(f"sqrt({x}) is not in Q(sqrt {x.d})")
    for u2 in ((x.a + r.a) / 2, (x.a - r.a) / 2):
        if u2 <= 0:
            continue
        u = sqrt_rational(u2)
        if not u.is_rational:
            continue
        v = x.b / (2 * u.a)
        cand = QuadExt(u.a, v, x.d)
        if cand.sign() < 0:
            cand = -cand
        if cand * cand == x:
            return cand
    raise IncompatibleRadicand(f"sqrt({x}) is not in Q(sqrt {x.d})")


@dataclass(frozen=True, slots=True)
class ComplexQuad:
    """``re + i*im`` with both parts in the same Q(sqrt d)."""

    re: QuadExt = QuadExt()
    im: QuadExt = QuadExt()

    def __post_init__(self):
        re = QuadExt.coerce(self.re)
        im = QuadExt.coerce(self.im)
        re._radicand_with(im)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    @classmethod
    def coerce(cls, x) -> "ComplexQuad":
        if isinstance(x, ComplexQuad):
            return x
        if isinstance(x, complex):
            raise TypeError("floating-point complex numbers are not exact")
        return cls(QuadExt.coerce(x))

    @property
    def d(self) -> int:
        return self.im.d if self.im.b else self.re.d

    @property
    def is_real(self) -> bool:
        return not self.im

    def __add__(self, other):
        try:
            o = ComplexQuad.coerce(other)
        except TypeError:
            return NotImplemented
        return ComplexQuad(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexQuad(-self.re, -self.im)

    def __sub__(self, other):
        try:
            o = ComplexQuad.coerce(other)
        except TypeError:
            return NotImplemented
        return ComplexQuad(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = ComplexQuad.coerce(other)
        except TypeError:
            return NotImplemented
        return ComplexQuad(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "ComplexQuad":
        return ComplexQuad(self.re, -self.im)

    def __eq__(self, other):
        try:
            o = ComplexQuad.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"({self.im})*i"
        return f"{self.re} + ({self.im})*i"

    def to_json(self) -> dict:
        return {"re": self.re.to_json(), "im": self.im.to_json()}

    @classmethod
    def from_json(cls, obj) -> "ComplexQuad":
        return cls(QuadExt.from_json(obj["re"]), QuadExt.from_json(obj["im"]))


I = ComplexQuad(QuadExt(0), QuadExt(1))
