"""Maps of spacetime that stabilize the worldline X, and invariance probing.

All maps act in the rational rest frame of X: clock time ``tau`` along X and
spatial coordinates ``xi`` orthogonal to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import IrrationalRadius, PreconditionViolation
from .relations import RelationSpec, related, representative
from .sampling import Sampler, random_quadruple
from .scalars import Rat, as_rational
from .spacetime import Event, Worldline, causal, lightlike, rational_sqrt

__all__ = [
    "AutomorphismSpec",
    "PythagoreanEvent",
    "apply",
    "invariance_counterexample",
    "phi_f_lightcone_audit",
    "pythagorean_event",
    "pythagorean_events",
    "rotation_from_cayley",
]

KINDS = ("translation", "rotation", "scale", "time_reflection", "phi_f")


@dataclass(frozen=True)
class AutomorphismSpec:
    kind: str
    amount: Rat = Rat(0)
    cayley: tuple = (Rat(0), Rat(0), Rat(0))
    center: Rat = Rat(0)
    alpha: Rat = Rat(1)
    a1: Rat = Rat(0)
    a3: Rat = Rat(0)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise PreconditionViolation(f"unknown automorphism kind {self.kind!r}")
        for name in ("amount", "center", "alpha", "a1", "a3"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        object.__setattr__(self, "cayley", tuple(as_rational(c) for c in self.cayley))
        if len(self.cayley) != 3:
            raise PreconditionViolation("cayley vector needs three components")
        if self.kind == "scale" and self.alpha <= 0:
            raise PreconditionViolation("scale factor must be positive")
        if self.kind == "phi_f" and (self.a1 < 0 or self.a3 < 0 or self.a1 == self.a3 == 0):
            raise PreconditionViolation("phi_f needs a1, a3 >= 0, not both zero")

    @classmethod
    def translation(cls, amount) -> AutomorphismSpec:
        return cls("translation", amount=amount)

    @classmethod
    def rotation(cls, *cayley) -> AutomorphismSpec:
        return cls("rotation", cayley=tuple(cayley))

    @classmethod
    def scale(cls, center, alpha) -> AutomorphismSpec:
        return cls("scale", center=center, alpha=alpha)

    @classmethod
    def time_reflection(cls, center=0) -> AutomorphismSpec:
        return cls("time_reflection", center=center)

    @classmethod
    def phi_f(cls, a1, a3) -> AutomorphismSpec:
        return cls("phi_f", a1=a1, a3=a3)

    @property
    def affine(self) -> bool:
        return self.kind != "phi_f"

    def f(self, t):
        """The odd increasing profile a1*t + a3*t^3 of phi_f."""
        return self.a1 * t + self.a3 * t * t * t

    def matrix(self):
        return _cayley_matrix(self.cayley)

    def label(self) -> str:
        if self.kind == "translation":
            return f"Translation({self.amount})"
        if self.kind == "rotation":
            return f"Rotation({','.join(map(str, self.cayley))})"
        if self.kind == "scale":
            return f"Scale({self.center},{self.alpha})"
        if self.kind == "time_reflection":
            return f"TimeReflection({self.center})"
        return f"PhiF({self.a1},{self.a3})"


def _cayley_matrix(v):
    """(I - S)^-1 (I + S) for S the skew matrix of v; exact rational rotation."""
    a, b, c = (as_rational(x) for x in v)
    n = 1 + a * a + b * b + c * c
    # closed form of the Cayley transform of [[0,-c,b],[c,0,-a],[-b,a,0]]
    return (
        ((1 + a * a - b * b - c * c) / n, 2 * (a * b - c) / n, 2 * (a * c + b) / n),
        (2 * (a * b + c) / n, (1 - a * a + b * b - c * c) / n, 2 * (b * c - a) / n),
        (2 * (a * c - b) / n, 2 * (b * c + a) / n, (1 - a * a - b * b + c * c) / n),
    )


def rotation_from_cayley(*v) -> AutomorphismSpec:
    if len(v) == 1:
        v = tuple(v[0])
    return AutomorphismSpec.rotation(*v)


@dataclass(frozen=True)
class PythagoreanEvent:
    """An event together with its exact (rational) distance from X."""

    event: Event
    radius: Rat


def apply(aut: AutomorphismSpec, W: Worldline, p: Event) -> Event:
    tau, *xi = W.to_adapted(p)
    k = aut.kind
    if k == "translation":
        tau = tau + aut.amount
    elif k == "rotation":
        R = aut.matrix()
        xi = [sum(R[i][j] * xi[j] for j in range(3)) for i in range(3)]
    elif k == "scale":
        tau = aut.alpha * (tau - aut.center) + aut.center
        xi = [aut.alpha * c for c in xi]
    elif k == "time_reflection":
        tau = 2 * aut.center - tau
    else:
        r = rational_sqrt(sum(c * c for c in xi))
        if r is None:
            raise IrrationalRadius(f"{p} has irrational distance from the worldline")
        if r == 0:
            tau = aut.f(tau)
        else:
            hi, lo = aut.f(tau + r), aut.f(tau - r)
            tau = (hi + lo) / 2
            xi = [abs(hi - lo) / 2 * c / r for c in xi]
    return W.from_adapted(tau, *xi)


def pythagorean_event(W: Worldline, quadruple, time, scale=1) -> PythagoreanEvent:
    """Event at clock time ``time`` and spatial offset scale*(a, b, c) from X."""
    a, b, c, d = quadruple
    if a * a + b * b + c * c != d * d:
        raise PreconditionViolation(f"{quadruple} is not a Pythagorean quadruple")
    scale = as_rational(scale)
    e = W.from_adapted(as_rational(time), scale * a, scale * b, scale * c)
    return PythagoreanEvent(e, abs(scale * d))


def pythagorean_events(W: Worldline, seed: int, count: int) -> list[PythagoreanEvent]:
    if count <= 0:
        raise PreconditionViolation("count must be positive")
    root = Sampler(seed)
    out = []
    for i in range(count):
        rng = root.split(i)
        quad = random_quadruple(rng)
        out.append(pythagorean_event(W, quad, rng.fraction(), rng.positive_fraction(3, 4)))
    return out


def class_partner(W: Worldline, spec: RelationSpec, p: Event, rng: Sampler) -> Optional[Event]:
    """A Pythagorean event in the class of ``p`` (None if p's class time is irrational)."""
    rep = representative(W, spec, p)
    if not rep.is_rational:
        return None
    quad = random_quadruple(rng)
    scale = rng.positive_fraction(3, 4)
    r = scale * quad[3]
    time = rep.to_fraction() + spec.profile()(r)
    return pythagorean_event(W, quad, time, scale).event


def pair_flips(W, spec, aut, p: Event, q: Event) -> bool:
    """Whether relatedness of (p, q) changes under the map."""
    return related(W, spec, p, q) != related(W, spec, apply(aut, W, p), apply(aut, W, q))


def invariance_counterexample(W: Worldline, spec: RelationSpec, aut: AutomorphismSpec,
                              seed: int, samples: int) -> Optional[tuple[Event, Event]]:
    """Search for p, q whose relatedness is not preserved by ``aut``.

    Even-indexed samples pair an event with a member of its own class, odd
    ones pair two independent events. All events are Pythagorean so that
    phi_f can be evaluated exactly.
    """
    root = Sampler(seed)
    for i in range(samples):
        rng = root.split(i)
        p = pythagorean_event(W, random_quadruple(rng), rng.fraction(),
                              rng.positive_fraction(3, 4)).event
        if i % 2 == 0:
            q = class_partner(W, spec, p, rng)
        else:
            q = pythagorean_event(W, random_quadruple(rng), rng.fraction(),
                                  rng.positive_fraction(3, 4)).event
        if q is not None and pair_flips(W, spec, aut, p, q):
            return p, q
    return None


def phi_f_lightcone_audit(aut: AutomorphismSpec, W: Worldline, seed: int,
                          samples: int) -> Optional[tuple[Event, Event]]:
    """Look for x on X and p on its light cone whose images are not lightlike."""
    if aut.kind != "phi_f":
        raise PreconditionViolation("audit applies to phi_f maps only")
    root = Sampler(seed)
    for i in range(samples):
        rng = root.split(i)
        t0 = rng.fraction()
        x = W.at(t0)
        quad = random_quadruple(rng)
        scale = rng.positive_fraction(3, 4)
        r = scale * quad[3]
        side = 1 if rng.integer(0, 1) else -1
        p = pythagorean_event(W, quad, t0 + side * r, scale).event
        assert lightlike(p, x)
        if not lightlike(apply(aut, W, p), apply(aut, W, x)):
            return x, p
    return None


def preserves_causal_structure(aut, W, p: Event, q: Event) -> bool:
    """kappa and lambda agree before and after the map."""
    fp, fq = apply(aut, W, p), apply(aut, W, q)
    return causal(p, q) == causal(fp, fq) and lightlike(p, q) == lightlike(fp, fq)
