"""Minkowski vocabulary over the rationals: events, vectors, worldlines.

Signature is (+,-,-,-), c = 1, and the global time orientation is
"increasing t of the standard chart".
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .errors import PreconditionViolation
from .scalars import Rat, QuadraticScalar, as_rational, quad_normalize, sqrt_rational

__all__ = [
    "Event",
    "EventQ",
    "FourVector",
    "ORIGIN",
    "Separation",
    "TIME_AXIS",
    "Worldline",
    "adapted_time_radius2",
    "causal",
    "eta",
    "is_future_directed",
    "lightlike",
    "precedes",
    "rational_sqrt",
    "separation",
]


def _fr(v) -> Rat:
    return v if type(v) is Rat else as_rational(v)


@dataclass(frozen=True)
class FourVector:
    dt: Rat
    dx: Rat
    dy: Rat
    dz: Rat

    def __post_init__(self):
        for name in ("dt", "dx", "dy", "dz"):
            object.__setattr__(self, name, _fr(getattr(self, name)))

    def __iter__(self) -> Iterator[Rat]:
        return iter((self.dt, self.dx, self.dy, self.dz))

    @property
    def spatial(self) -> tuple[Rat, Rat, Rat]:
        return (self.dx, self.dy, self.dz)

    def __add__(self, other):
        if not isinstance(other, FourVector):
            return NotImplemented
        return FourVector(self.dt + other.dt, self.dx + other.dx,
                          self.dy + other.dy, self.dz + other.dz)

    def __sub__(self, other):
        if not isinstance(other, FourVector):
            return NotImplemented
        return FourVector(self.dt - other.dt, self.dx - other.dx,
                          self.dy - other.dy, self.dz - other.dz)

    def __neg__(self):
        return FourVector(-self.dt, -self.dx, -self.dy, -self.dz)

    def __mul__(self, k):
        k = _fr(k)
        return FourVector(k * self.dt, k * self.dx, k * self.dy, k * self.dz)

    __rmul__ = __mul__

    def __truediv__(self, k):
        return self * (1 / _fr(k))

    def is_zero(self) -> bool:
        return not (self.dt or self.dx or self.dy or self.dz)


@dataclass(frozen=True)
class Event:
    t: Rat
    x: Rat
    y: Rat
    z: Rat

    def __post_init__(self):
        for name in ("t", "x", "y", "z"):
            object.__setattr__(self, name, _fr(getattr(self, name)))

    def __iter__(self) -> Iterator[Rat]:
        return iter((self.t, self.x, self.y, self.z))

    def __sub__(self, other):
        if isinstance(other, Event):
            return FourVector(self.t - other.t, self.x - other.x,
                              self.y - other.y, self.z - other.z)
        if isinstance(other, FourVector):
            return self + (-other)
        return NotImplemented

    def __add__(self, v):
        if not isinstance(v, FourVector):
            return NotImplemented
        return Event(self.t + v.dt, self.x + v.dx, self.y + v.dy, self.z + v.dz)

    @classmethod
    def of(cls, *coords) -> Event:
        if len(coords) == 1:
            coords = tuple(coords[0])
        return cls(*coords)

    def as_vector(self) -> FourVector:
        return FourVector(self.t, self.x, self.y, self.z)


ORIGIN = Event(0, 0, 0, 0)


@dataclass(frozen=True)
class EventQ:
    """Event whose coordinates live in one quadratic field Q(sqrt d)."""

    t: QuadraticScalar
    x: QuadraticScalar
    y: QuadraticScalar
    z: QuadraticScalar

    def __post_init__(self):
        radicands = set()
        for name in ("t", "x", "y", "z"):
            v = getattr(self, name)
            if not isinstance(v, QuadraticScalar):
                v = QuadraticScalar.rational(v)
                object.__setattr__(self, name, v)
            if v.d:
                radicands.add(v.d)
        if len(radicands) > 1:
            raise PreconditionViolation(f"mixed radicands {sorted(radicands)}")

    def __iter__(self) -> Iterator[QuadraticScalar]:
        return iter((self.t, self.x, self.y, self.z))

    @property
    def radicand(self) -> int:
        return max(c.d for c in self)

    @property
    def is_rational(self) -> bool:
        return self.radicand == 0

    @classmethod
    def from_event(cls, e: Event) -> EventQ:
        return cls(*(QuadraticScalar.rational(c) for c in e))

    def to_event(self) -> Event:
        return Event(*(c.to_fraction() for c in self))

    def offset(self, other) -> tuple[QuadraticScalar, ...]:
        """Coordinates of ``self - other`` for an Event or EventQ ``other``."""
        return tuple(a - b for a, b in zip(self, other))


def eta(u, v) -> Rat:
    """Minkowski product with signature (+,-,-,-)."""
    u0, u1, u2, u3 = u
    v0, v1, v2, v3 = v
    return u0 * v0 - u1 * v1 - u2 * v2 - u3 * v3


class Separation(enum.Enum):
    COINCIDENT = "coincident"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"
    SPACELIKE = "spacelike"


def separation(p: Event, q: Event) -> Separation:
    d = p - q
    if d.is_zero():
        return Separation.COINCIDENT
    n = eta(d, d)
    if n > 0:
        return Separation.TIMELIKE
    if n == 0:
        return Separation.LIGHTLIKE
    return Separation.SPACELIKE


def causal(p: Event, q: Event) -> bool:
    """The causal connectibility relation: eta(p-q, p-q) >= 0."""
    d = p - q
    return eta(d, d) >= 0


def lightlike(p: Event, q: Event) -> bool:
    d = p - q
    return eta(d, d) == 0


def is_future_directed(v: FourVector) -> bool:
    """Future-directed causal (or zero) vector under the global orientation."""
    return eta(v, v) >= 0 and v.dt >= 0


def precedes(p: Event, q: Event) -> bool:
    """The causal order: q - p is causal and future-directed (or zero)."""
    d = q - p
    if d.is_zero():
        return True
    return eta(d, d) >= 0 and d.dt > 0


def rational_sqrt(value) -> Rat | None:
    """Square root of a non-negative rational if it is rational, else None."""
    r = sqrt_rational(value)
    return r.a if r.is_rational else None


def _boost_frame(u: FourVector) -> tuple[FourVector, FourVector, FourVector, FourVector]:
    """Rational orthonormal frame whose timelike leg is the unit vector ``u``.

    Columns of the pure boost taking (1,0,0,0) to ``u``; its spatial block
    is I + w w^T / (1 + u0), rational whenever ``u`` is.
    """
    u0 = u.dt
    w = u.spatial
    legs = [u]
    for i in range(3):
        k = w[i] / (1 + u0)
        spatial = [(1 if j == i else 0) + w[j] * k for j in range(3)]
        legs.append(FourVector(w[i], *spatial))
    return tuple(legs)


@dataclass(frozen=True)
class Worldline:
    """Inertial observer X = {origin + s*direction}.

    ``direction`` must be future-directed timelike with a rational proper
    length ``clock_unit``; the clock reads T(origin + s*direction) = s*clock_unit.
    """

    origin: Event
    direction: FourVector

    def __post_init__(self):
        d = self.direction
        n = eta(d, d)
        if n <= 0 or d.dt <= 0:
            raise PreconditionViolation("worldline direction must be future timelike")
        c = rational_sqrt(n)
        if c is None:
            raise PreconditionViolation(
                f"eta(direction, direction) = {n} is not a rational square"
            )
        object.__setattr__(self, "_clock_unit", c)
        object.__setattr__(self, "_frame", _boost_frame(d / c))

    @property
    def clock_unit(self) -> Rat:
        return self._clock_unit

    @property
    def unit(self) -> FourVector:
        return self.direction / self.clock_unit

    def frame(self) -> tuple[FourVector, FourVector, FourVector, FourVector]:
        return self._frame

    def at(self, clock_time) -> Event:
        """The point of X whose clock reads ``clock_time``."""
        return self.origin + self.unit * clock_time

    def at_q(self, clock_time: QuadraticScalar) -> EventQ:
        u = self.unit
        return EventQ(*(o + clock_time * c for o, c in zip(self.origin, u)))

    def clock(self, p: Event) -> Rat:
        """Clock reading of a point of X (PreconditionViolation if off X)."""
        tau, r2 = adapted_time_radius2(self, p)
        if r2 != 0:
            raise PreconditionViolation(f"{p} is not on the worldline")
        return tau

    def contains(self, p: Event) -> bool:
        return adapted_time_radius2(self, p)[1] == 0

    def to_adapted(self, p: Event) -> tuple[Rat, Rat, Rat, Rat]:
        """Coordinates (tau, xi1, xi2, xi3) in the rational rest frame of X."""
        v = p - self.origin
        e0, e1, e2, e3 = self.frame()
        return (eta(v, e0), -eta(v, e1), -eta(v, e2), -eta(v, e3))

    def from_adapted(self, tau, xi1=0, xi2=0, xi3=0) -> Event:
        e0, e1, e2, e3 = self.frame()
        v = e0 * tau + e1 * xi1 + e2 * xi2 + e3 * xi3
        return self.origin + v


TIME_AXIS = Worldline(ORIGIN, FourVector(1, 0, 0, 0))


def adapted_time_radius2(W: Worldline, p: Event) -> tuple[Rat, Rat]:
    """Clock time of the projection of ``p`` on X and squared distance from X."""
    v = p - W.origin
    d = W.direction
    s = eta(v, d) / eta(d, d)
    w = v - d * s
    return s * W.clock_unit, -eta(w, w)


def radius(W: Worldline, p: Event) -> QuadraticScalar:
    """Exact spatial distance of ``p`` from X."""
    return quad_normalize(0, 1, adapted_time_radius2(W, p)[1])
