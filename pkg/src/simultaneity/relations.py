"""Simultaneity relations relative to an inertial observer X.

Every supported relation is a *revolution* relation: its classes are the
translates along X of a surface ``t = f(r)`` rotated about X, with ``f`` a
rational polynomial vanishing at 0. Standard synchrony is ``f = 0``, the
conic relations of speed ``v`` are ``f(r) = +-r/v`` and the half light cones
are the conic relations with ``v = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

from .errors import PreconditionViolation
from .sampling import Sampler
from .scalars import Rat, QuadraticScalar, as_rational, sqrt_rational
from .spacetime import (
    Event,
    EventQ,
    FourVector,
    Worldline,
    adapted_time_radius2,
    eta,
    precedes,
)

__all__ = [
    "RationalPolynomial",
    "RelationSpec",
    "SoundnessReport",
    "conic_member",
    "conic_member_at",
    "halfcone_formula",
    "interval_via_clock",
    "project",
    "psi",
    "radar_time",
    "radar_times",
    "related",
    "representative",
    "soundness_report",
]


# -- radar and projection ---------------------------------------------------

def project(W: Worldline, p: Event) -> Event:
    """The point of X standard-synchronous with ``p``."""
    d = W.direction
    s = eta(p - W.origin, d) / eta(d, d)
    return W.origin + d * s


def psi(W: Worldline, p: Event, sign: int) -> tuple[QuadraticScalar, EventQ]:
    """Intersection of the future (``sign=+1``) or past light cone of ``p`` with X.

    Returns the clock time there and the intersection point. The future
    cone meets X at the later of the two roots.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    u = p - W.origin
    d = W.direction
    dd = eta(d, d)
    ud = eta(u, d)
    disc = ud * ud - dd * eta(u, u)
    s = (ud + sign * sqrt_rational(disc)) / dd
    return s * W.clock_unit, _point_on(W, s)


def radar_times(W: Worldline, p: Event) -> tuple[QuadraticScalar, QuadraticScalar]:
    """Clock times (T(psi-), T(psi+)) where the past and future light cones of ``p`` meet X."""
    u = p - W.origin
    d = W.direction
    dd = eta(d, d)
    ud = eta(u, d)
    root = sqrt_rational(ud * ud - dd * eta(u, u))
    c = W.clock_unit
    return (ud - root) * (c / dd), (ud + root) * (c / dd)


def _point_on(W: Worldline, s: QuadraticScalar) -> EventQ:
    return EventQ(*(o + s * c for o, c in zip(W.origin, W.direction)))


def radar_time(W: Worldline, p: Event) -> Rat:
    """Half the sum of emission and reception clock times; always rational."""
    t_minus, t_plus = radar_times(W, p)
    return ((t_plus + t_minus) / 2).to_fraction()


def interval_via_clock(W: Worldline, o: Event, p: Event) -> Rat:
    """eta(p - o, p - o) from the clock alone: T(x1) * T(x2) with T(o) = 0."""
    if not W.contains(o):
        raise PreconditionViolation(f"{o} is not on the worldline")
    t0 = W.clock(o)
    t1 = psi(W, p, -1)[0] - t0
    t2 = psi(W, p, +1)[0] - t0
    return (t1 * t2).to_fraction()


# -- relation specs ---------------------------------------------------------

@dataclass(frozen=True)
class RationalPolynomial:
    """f(r) = sum coefficients[i] * r**i with f(0) = 0."""

    coefficients: tuple[Rat, ...]

    def __post_init__(self):
        cs = [as_rational(c) for c in self.coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        if cs and cs[0] != 0:
            raise PreconditionViolation("revolution profile must satisfy f(0) = 0")
        object.__setattr__(self, "coefficients", tuple(cs))

    def __call__(self, r):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * r + c
        return acc

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, i: int) -> Rat:
        return self.coefficients[i] if i < len(self.coefficients) else Rat(0)


@dataclass(frozen=True)
class RelationSpec:
    """Symbolic simultaneity relation.

    ``kind`` is one of ``"sigma"``, ``"halfcone"``, ``"conic"``,
    ``"revolution"``; ``sign`` is +1/-1 for half cones and conics.
    """

    kind: str
    sign: int = 1
    v: Optional[Rat] = None
    coeffs: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.kind not in ("sigma", "halfcone", "conic", "revolution"):
            raise PreconditionViolation(f"unknown relation kind {self.kind!r}")
        if self.kind in ("halfcone", "conic") and self.sign not in (1, -1):
            raise PreconditionViolation("sign must be +1 or -1")
        if self.kind == "conic":
            if self.v is None or as_rational(self.v) <= 0:
                raise PreconditionViolation("conic speed v must be positive")
            object.__setattr__(self, "v", as_rational(self.v))
        if self.kind == "revolution":
            object.__setattr__(self, "coeffs", RationalPolynomial(tuple(self.coeffs)).coefficients)

    @classmethod
    def sigma(cls) -> RelationSpec:
        return cls("sigma")

    @classmethod
    def halfcone(cls, sign: int = 1) -> RelationSpec:
        return cls("halfcone", sign=sign)

    @classmethod
    def conic(cls, v, sign: int = 1) -> RelationSpec:
        return cls("conic", sign=sign, v=as_rational(v))

    @classmethod
    def revolution(cls, coeffs: Sequence) -> RelationSpec:
        return cls("revolution", coeffs=tuple(coeffs))

    @cached_property
    def _profile(self) -> RationalPolynomial:
        return self.profile()

    def profile(self) -> RationalPolynomial:
        """The canonical revolution profile f of this relation."""
        if self.kind == "sigma":
            return RationalPolynomial(())
        if self.kind == "halfcone":
            return RationalPolynomial((0, self.sign))
        if self.kind == "conic":
            return RationalPolynomial((0, self.sign / self.v))
        return RationalPolynomial(self.coeffs)

    def canonical(self) -> RelationSpec:
        return RelationSpec.revolution(self.profile().coefficients)

    def label(self) -> str:
        s = "+" if self.sign > 0 else "-"
        if self.kind == "sigma":
            return "Sigma"
        if self.kind == "halfcone":
            return f"HalfCone({s})"
        if self.kind == "conic":
            return f"Conic({self.v},{s})"
        return f"Revolution({','.join(str(c) for c in self.coeffs)})"


def representative(W: Worldline, spec: RelationSpec, p: Event) -> QuadraticScalar:
    """Clock time of the unique point of X related to ``p``.

    Uses only the radar times: (T+ + T-)/2 - f((T+ - T-)/2).
    """
    t_minus, t_plus = radar_times(W, p)
    f = spec._profile
    return (t_plus + t_minus) / 2 - f((t_plus - t_minus) / 2)


def related(W: Worldline, spec: RelationSpec, p: Event, q: Event) -> bool:
    return representative(W, spec, p) == representative(W, spec, q)


# -- analytic conic membership ----------------------------------------------

def conic_member(W: Worldline, v, sign: int, apex: Event, y: Event) -> bool:
    """Membership of ``y`` in the speed-``v`` cone with apex ``apex`` on X.

    Literal defining equation: eta(y - pi(y), y - pi(y)) = -v^2 eta(pi(y) - x, pi(y) - x)
    together with x <= pi(y) (future cone) or pi(y) <= x (past cone).
    """
    v = as_rational(v)
    if not W.contains(apex):
        raise PreconditionViolation("apex must lie on the worldline")
    py = project(W, y)
    lhs = eta(y - py, y - py)
    rhs = -v * v * eta(py - apex, py - apex)
    if lhs != rhs:
        return False
    return precedes(apex, py) if sign > 0 else precedes(py, apex)


def conic_member_at(W: Worldline, v, sign: int, apex_time, y: Event) -> bool:
    """Same as :func:`conic_member` with the apex given by an exact clock time.

    The apex may be irrational (a :class:`QuadraticScalar`), so the equation
    is evaluated in clock time and radius: r^2 = v^2 (tau_y - tau_x)^2.
    """
    v = as_rational(v)
    tau, r2 = adapted_time_radius2(W, y)
    dt = tau - apex_time
    if not isinstance(dt, QuadraticScalar):
        dt = QuadraticScalar.rational(dt)
    if (dt * dt * (v * v)) != r2:
        return False
    return dt >= 0 if sign > 0 else dt <= 0


def halfcone_formula(W: Worldline, x: Event, y: Event, sign: int = 1) -> bool:
    """Explicit first-order description of the half-cone relation.

    For the future version: some e on X has x, y on its light cone, and both
    X n Lambda_x and X n Lambda_y contain a point later than e. Evaluated
    through the radar intersections; only meaningful off X.
    """
    hits_x = [psi(W, x, s)[0] for s in (1, -1)]
    hits_y = [psi(W, y, s)[0] for s in (1, -1)]
    for e in set(hits_x) & set(hits_y):
        if sign > 0:
            ok = any(h > e for h in hits_x) and any(h > e for h in hits_y)
        else:
            ok = any(h < e for h in hits_x) and any(h < e for h in hits_y)
        if ok:
            return True
    return False


# -- soundness --------------------------------------------------------------

@dataclass
class Verdict:
    passed: bool
    witness: Optional[tuple] = None
    note: str = ""


@dataclass
class SoundnessReport:
    spec: RelationSpec
    seed: int
    samples: int
    M: Verdict
    B: Verdict
    G: Verdict
    BY: Verdict


def _spatial_unit(W: Worldline) -> FourVector:
    return W.frame()[1]


def _check_M(W, spec, rng: Sampler, samples: int) -> Verdict:
    x = W.origin
    y = x + _spatial_unit(W)
    tau = representative(W, spec, y).to_fraction()
    xr = W.at(tau)
    if not related(W, spec, xr, y):
        return Verdict(False, note="no off-worldline point related to X")
    # non-universality: two sampled events that are not related
    for i in range(samples):
        s = rng.split(i)
        p, q = s.event(), s.event()
        if not related(W, spec, p, q):
            return Verdict(True, (xr, y), "x on X related to y off X; relation not universal")
    return Verdict(False, (xr, y), "no unrelated pair among samples")


def _check_B(W, spec, rng: Sampler, samples: int) -> Verdict:
    # The representative is a single-valued function of the event, so
    # existence and uniqueness hold by construction; confirm on samples.
    for i in range(samples):
        p = rng.split(i).event()
        rep = representative(W, spec, p)
        if rep.is_rational:
            x = W.at(rep.to_fraction())
            if not related(W, spec, x, p):
                return Verdict(False, (p,), "representative not related to event")
            # uniqueness: the points of X have distinct representatives
            other = W.at(rep.to_fraction() + 1)
            if related(W, spec, other, p):
                return Verdict(False, (p, other), "two points of X related to event")
    return Verdict(True, note="unique representative by construction (clock time formula)")


def _rational_roots(coeffs: Sequence[Rat]) -> list[Rat]:
    """Rational roots of a polynomial with rational coefficients (index = degree)."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    if len(cs) <= 1:
        return []
    roots = []
    if cs[0] == 0:
        roots.append(Rat(0))
        while cs and cs[0] == 0:
            cs.pop(0)
        if len(cs) <= 1:
            return roots
    lcm = 1
    for c in cs:
        lcm = lcm * c.denominator // _gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in cs]
    for num in _divisors(abs(ints[0])):
        for den in _divisors(abs(ints[-1])):
            for cand in (Rat(num, den), Rat(-num, den)):
                if cand not in roots and sum(c * cand ** i for i, c in enumerate(ints)) == 0:
                    roots.append(cand)
    return roots


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _divisors(n: int) -> list[int]:
    out, i = [], 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i * i != n:
                out.append(n // i)
        i += 1
    return sorted(out)


def _poly_compose_linear(f: RationalPolynomial, w: Rat) -> list[Rat]:
    """Coefficients of s -> f(w s)."""
    return [c * w ** i for i, c in enumerate(f.coefficients)]


def _check_G(W, spec, rng: Sampler, samples: int) -> Verdict:
    """Search radial straight timelike lines through X for two related points.

    Along x(s) = x0 + s*(unit + w*e), x0 on X and 0 < w < 1, the
    representative is tau0 + s - f(w|s|); a related pair is a nonzero root
    of s - f(w|s|), searched among rationals on each half line.
    """
    f = spec.profile()
    e = _spatial_unit(W)
    speeds = []
    a1 = abs(f.coefficient(1))
    if a1 > 1:
        speeds.append(1 / a1)  # critical speed where the linear part cancels
    for i in range(samples):
        speeds.append(rng.split(i).unit_fraction_interval())
    seen = set()
    for w in speeds:
        if w in seen:
            continue
        seen.add(w)
        x0 = W.origin
        vel = W.unit + e * w
        # s > 0: g(s) = s - f(w s); s < 0: g(s) = s - f(-w s)
        for side in (1, -1):
            g = _poly_compose_linear(f, w * side)
            g = [-c for c in g]
            while len(g) < 2:
                g.append(Rat(0))
            g[1] += 1
            if all(c == 0 for c in g):
                p, q = x0 + vel * (2 * side), x0 + vel * (4 * side)
                if related(W, spec, p, q):
                    return Verdict(False, (p, q, w), "whole line lies in one class")
            for s in _rational_roots(g):
                if s != 0 and (s > 0) == (side > 0):
                    p, q = x0, x0 + vel * s
                    if related(W, spec, p, q):
                        return Verdict(False, (p, q, w), "two related points on one line")
    return Verdict(True, note=f"no related pair on {len(seen)} radial timelike lines")


def _check_BY(W, spec, rng: Sampler, samples: int) -> Verdict:
    e = _spatial_unit(W)
    probes = [
        (W.origin, W.origin + W.unit + e * Rat(9, 10)),
        (W.origin + e * Rat(9, 10), W.origin + W.unit),
    ]
    for i in range(samples):
        s = rng.split(i)
        p = s.event()
        probes.append((p, p + s.future_causal()))
    for e1, e2 in probes:
        if not precedes(e1, e2):
            raise AssertionError("sampled pair is not causally ordered")
        if representative(W, spec, e2) < representative(W, spec, e1):
            return Verdict(False, (e1, e2), "causal pair time-reversed on X")
    return Verdict(True, note=f"{len(probes)} causal pairs")


def soundness_report(W: Worldline, spec: RelationSpec, sample_seed: int,
                     sample_count: int) -> SoundnessReport:
    if sample_count <= 0:
        raise PreconditionViolation("sample_count must be positive")
    root = Sampler(sample_seed)
    return SoundnessReport(
        spec=spec,
        seed=sample_seed,
        samples=sample_count,
        M=_check_M(W, spec, root.split(0), sample_count),
        B=_check_B(W, spec, root.split(1), sample_count),
        G=_check_G(W, spec, root.split(2), sample_count),
        BY=_check_BY(W, spec, root.split(3), sample_count),
    )
