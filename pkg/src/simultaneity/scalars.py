"""Exact scalars: rationals and elements of real quadratic fields.

Rationals are ``gmpy2.mpq`` (exported as :data:`Rat`). :class:`QuadraticScalar`
holds ``a + b*sqrt(d)`` with ``d`` square-free; rational values always
carry ``b == 0`` and ``d == 0`` so that equality is equality of normal forms.
"""

from __future__ import annotations

import enum
import math
from functools import lru_cache
from numbers import Rational

from gmpy2 import mpq

from .errors import IncommensurableRadicands, PreconditionViolation

Rat = mpq

__all__ = [
    "Ordering",
    "QuadraticScalar",
    "Rat",
    "as_rational",
    "quad_compare",
    "quad_normalize",
    "sqrt_rational",
    "square_free_decomposition",
]


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def as_rational(value) -> Rat:
    if type(value) is mpq:
        return value
    if isinstance(value, (int, Rational, str)):
        return mpq(value)
    if isinstance(value, QuadraticScalar) and value.is_rational:
        return value.a
    raise TypeError(f"not an exact rational: {value!r}")


_ZERO = mpq(0)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


@lru_cache(maxsize=65536)
def square_free_decomposition(n: int) -> tuple[int, int]:
    """Return ``(s, f)`` with ``n == s * f**2`` and ``s`` square-free.

    Trial division only up to the cube root of what is left: once no prime
    below ``p`` divides the cofactor and ``p**3`` exceeds it, the cofactor
    has at most two prime factors and is either a prime square or square-free.
    """
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0, 0
    square, free = 1, 1
    p = 2
    while p * p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            square *= p ** (e // 2)
            if e % 2:
                free *= p
        p += 1 if p == 2 else 2
    r = math.isqrt(n)
    if r * r == n:
        square *= r
    else:
        free *= n
    return free, square


class QuadraticScalar:
    """An exact real number ``a + b*sqrt(d)``.

    Construct through :func:`quad_normalize` (or the constructor, which
    normalizes). Arithmetic is defined when both operands share a radicand
    or one of them is rational.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d=0):
        q = quad_normalize(a, b, d)
        object.__setattr__(self, "a", q.a)
        object.__setattr__(self, "b", q.b)
        object.__setattr__(self, "d", q.d)

    @classmethod
    def _raw(cls, a: Rat, b: Rat, d: int) -> QuadraticScalar:
        obj = object.__new__(cls)
        if not b:
            d = 0
        elif not d:
            b = _ZERO
        object.__setattr__(obj, "a", a)
        object.__setattr__(obj, "b", b)
        object.__setattr__(obj, "d", d)
        return obj

    @classmethod
    def rational(cls, value) -> QuadraticScalar:
        return cls._raw(as_rational(value), _ZERO, 0)

    def __setattr__(self, name, value):
        raise AttributeError("QuadraticScalar is immutable")

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def to_fraction(self) -> Rat:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.a

    def conjugate(self) -> QuadraticScalar:
        return QuadraticScalar._raw(self.a, -self.b, self.d)

    def norm(self) -> Rat:
        """Field norm ``a**2 - d*b**2``."""
        return self.a * self.a - self.d * self.b * self.b

    def sign(self) -> int:
        sa, sb = _sign(self.a), _sign(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # a and b*sqrt(d) have opposite signs
        diff = self.a * self.a - self.b * self.b * self.d
        return sa if diff > 0 else sb

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def _coerce(self, other) -> QuadraticScalar | None:
        if isinstance(other, QuadraticScalar):
            return other
        if type(other) is mpq:
            return QuadraticScalar._raw(other, _ZERO, 0)
        if isinstance(other, (int, Rational)):
            return QuadraticScalar._raw(mpq(other), _ZERO, 0)
        return None

    def _common_radicand(self, other: QuadraticScalar) -> int:
        if self.d == other.d or other.d == 0:
            return self.d
        if self.d == 0:
            return other.d
        raise IncommensurableRadicands(
            f"sqrt({self.d}) and sqrt({other.d}) in one expression"
        )

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.d:
            return QuadraticScalar._raw(self.a + o.a, self.b, self.d)
        if not self.d:
            return QuadraticScalar._raw(self.a + o.a, o.b, o.d)
        d = self._common_radicand(o)
        return QuadraticScalar._raw(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticScalar._raw(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.d:
            return QuadraticScalar._raw(self.a * o.a, self.b * o.a, self.d)
        if not self.d:
            return QuadraticScalar._raw(self.a * o.a, self.a * o.b, o.d)
        d = self._common_radicand(o)
        a = self.a * o.a + self.b * o.b * d
        b = self.a * o.b + self.b * o.a
        return QuadraticScalar._raw(a, b, d)

    __rmul__ = __mul__

    def inverse(self) -> QuadraticScalar:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        return QuadraticScalar._raw(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.d:
            return QuadraticScalar._raw(self.a / o.a, self.b / o.a, self.d)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = QuadraticScalar._raw(mpq(1), _ZERO, 0)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.a, self.b, self.d) == (o.a, o.b, o.d)

    def __hash__(self):
        if self.is_rational:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quad_compare(self, o) is Ordering.LESS

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quad_compare(self, o) is not Ordering.GREATER

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quad_compare(self, o) is Ordering.GREATER

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quad_compare(self, o) is not Ordering.LESS

    def __repr__(self):
        if self.is_rational:
            return f"QuadraticScalar({str(self.a)!r})"
        return f"QuadraticScalar({str(self.a)!r}, {str(self.b)!r}, {self.d})"

    def __str__(self):
        if self.is_rational:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt({self.d})"
        op = "+" if self.b > 0 else "-"
        return f"{self.a} {op} {abs(self.b)}*sqrt({self.d})"


def quad_normalize(a, b, d) -> QuadraticScalar:
    """Normal form of ``a + b*sqrt(d)`` for rational ``d >= 0``.

    >>> quad_normalize(1, 2, 8)
    QuadraticScalar('1', '4', 2)
    >>> quad_normalize(3, 5, 9)
    QuadraticScalar('18')
    """
    a, b, d = as_rational(a), as_rational(b), as_rational(d)
    if d < 0:
        raise PreconditionViolation("radicand must be non-negative")
    if b == 0 or d == 0:
        return QuadraticScalar._raw(a, _ZERO, 0)
    # sqrt(n/m) = sqrt(n*m)/m
    n, m = int(d.numerator), int(d.denominator)
    free, square = square_free_decomposition(n * m)
    b = b * square / m
    if free == 1:
        return QuadraticScalar._raw(a + b, _ZERO, 0)
    return QuadraticScalar._raw(a, b, free)


def sqrt_rational(value) -> QuadraticScalar:
    """Exact non-negative square root of a non-negative rational."""
    return quad_normalize(0, 1, value)


def quad_compare(s1, s2) -> Ordering:
    """Exact ordering of two quadratic scalars, radicands possibly different."""
    s1 = s1 if isinstance(s1, QuadraticScalar) else QuadraticScalar.rational(s1)
    s2 = s2 if isinstance(s2, QuadraticScalar) else QuadraticScalar.rational(s2)
    if s1.d == s2.d or s1.d == 0 or s2.d == 0:
        return Ordering((s1 - s2).sign())
    # s1 - s2 = u - w with u = s1 - a2 in Q(sqrt d1) and w = b2*sqrt(d2)
    u = QuadraticScalar._raw(s1.a - s2.a, s1.b, s1.d)
    su, sw = u.sign(), _sign(s2.b)
    if su != sw:
        return Ordering(1 if su > sw else -1)
    # same sign, nonzero: compare squares
    diff = (u * u - s2.b * s2.b * s2.d).sign()
    if diff == 0:
        raise AssertionError("distinct square-free radicands compared equal")
    return Ordering(diff if su > 0 else -diff)
