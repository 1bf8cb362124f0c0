"""Deterministic, splittable sampling of exact spacetime objects.

The generator is SplitMix64 (Steele, Lea and Flood, 2014). ``Sampler.split(i)``
derives an independent stream for sample ``i`` from the parent seed alone, so
a sweep produces identical samples whether it runs serially or in parallel.
"""

from __future__ import annotations

from .scalars import Rat
from .spacetime import Event, FourVector, Worldline, eta

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & MASK64
    return z ^ (z >> 31)


class Sampler:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return _mix64(self.state)

    def split(self, index: int) -> Sampler:
        return Sampler(_mix64((self.state ^ _mix64(index + 1)) & MASK64))

    def integer(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi] (modulo reduction)."""
        return lo + self.next_u64() % (hi - lo + 1)

    def choice(self, seq):
        return seq[self.integer(0, len(seq) - 1)]

    def fraction(self, bound: int = 12, den: int = 6) -> Rat:
        return Rat(self.integer(-bound, bound), self.integer(1, den))

    def positive_fraction(self, bound: int = 12, den: int = 6) -> Rat:
        return Rat(self.integer(1, bound), self.integer(1, den))

    def unit_fraction_interval(self, den: int = 12) -> Rat:
        """Rational strictly inside (0, 1)."""
        q = self.integer(2, den)
        return Rat(self.integer(1, q - 1), q)

    def event(self, bound: int = 12, den: int = 6) -> Event:
        return Event(*(self.fraction(bound, den) for _ in range(4)))

    def vector(self, bound: int = 12, den: int = 6) -> FourVector:
        return FourVector(*(self.fraction(bound, den) for _ in range(4)))

    def ball_point(self, den: int = 5) -> tuple[Rat, Rat, Rat]:
        """Rational point with Euclidean norm < 1."""
        while True:
            w = tuple(Rat(self.integer(-den + 1, den - 1), den) for _ in range(3))
            if sum(c * c for c in w) < 1:
                return w

    def unit_timelike(self, den: int = 5) -> FourVector:
        """Rational future unit timelike vector (1+|w|^2, 2w) / (1-|w|^2)."""
        w = self.ball_point(den)
        n2 = sum(c * c for c in w)
        k = 1 / (1 - n2)
        return FourVector((1 + n2) * k, *(2 * c * k for c in w))

    def unit_spatial(self, den: int = 5) -> tuple[Rat, Rat, Rat]:
        """Rational point on the unit 2-sphere (inverse stereographic)."""
        a, b = Rat(self.integer(-3 * den, 3 * den), den), Rat(
            self.integer(-3 * den, 3 * den), den)
        n = 1 + a * a + b * b
        return (2 * a / n, 2 * b / n, (1 - a * a - b * b) / n)

    def worldline(self) -> Worldline:
        u = self.unit_timelike()
        return Worldline(self.event(6, 4), u * self.positive_fraction(4, 3))

    def future_causal(self, null: bool = False) -> FourVector:
        """Future-directed causal vector; null if requested, else timelike or null."""
        s = self.unit_spatial()
        r = self.positive_fraction(6, 4)
        if null:
            dt = r
        else:
            dt = r * (1 + Rat(self.integer(0, 8), 4))
        return FourVector(dt, *(r * c for c in s))


def pythagorean_quadruple(m: int, n: int, p: int, q: int) -> tuple[int, int, int, int]:
    """(a, b, c, d) with a^2 + b^2 + c^2 = d^2 from the four-square identity."""
    a = m * m + n * n - p * p - q * q
    b = 2 * (m * q + n * p)
    c = 2 * (n * q - m * p)
    d = m * m + n * n + p * p + q * q
    return a, b, c, d


def random_quadruple(rng: Sampler, bound: int = 3) -> tuple[int, int, int, int]:
    while True:
        quad = pythagorean_quadruple(*(rng.integer(-bound, bound) for _ in range(4)))
        if quad[3]:
            return quad


def check_quadruple(quad) -> bool:
    a, b, c, d = quad
    return a * a + b * b + c * c == d * d


def is_timelike(v: FourVector) -> bool:
    return eta(v, v) > 0
