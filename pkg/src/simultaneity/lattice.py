"""Rational lattice in a Lorentzian 2-plane through X, built from light cones,
lines and standard synchrony alone, and the conic-membership certificate it
yields.

In null coordinates the grid is x_{m,k} = x00 + s(m+k) n_plus + s k n_minus,
so in the plane's adapted coordinates (clock offset, signed distance from X)
the point x_{m,k} sits at h(2k+m, m) with h = s * eta(n_plus, unit of X).
That closed form is used as an oracle; the grid itself is produced by the
raw cone/line recurrence.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Union

from .errors import PreconditionViolation
from .relations import conic_member_at, psi, radar_time
from .scalars import QuadraticScalar, Rat, as_rational
from .spacetime import Event, FourVector, Worldline, adapted_time_radius2, eta, rational_sqrt

__all__ = [
    "LatticeGrid",
    "LorentzPlane",
    "Member",
    "NotMember",
    "build_grid",
    "closed_form_point",
    "grid_csv",
    "lattice_conic_membership",
    "plane_coordinates",
    "plane_from_null_ray",
    "sandwich_apexes",
]


@dataclass(frozen=True)
class LorentzPlane:
    base: Worldline
    null_plus: FourVector
    null_minus: FourVector

    @property
    def height(self) -> Rat:
        """eta(null_plus, unit of X): clock time gained per unit step along null_plus."""
        return eta(self.null_plus, self.base.unit)

    @property
    def axis(self) -> FourVector:
        """Unit spacelike direction of the plane pointing toward null_plus."""
        u = self.base.unit
        h = self.height
        return (self.null_plus - u * h) / h

    def flipped(self) -> LorentzPlane:
        """The same plane with the two null rays exchanged."""
        return LorentzPlane(self.base, self.null_minus, self.null_plus)


def plane_from_null_ray(W: Worldline, n: FourVector) -> LorentzPlane:
    """Plane spanned by X and the null ray ``n``; its other null ray is the
    reflection of ``n`` in X, scaled to be future-directed."""
    if n.is_zero() or eta(n, n) != 0:
        raise PreconditionViolation("null ray must be a nonzero null vector")
    if n.dt <= 0:
        raise PreconditionViolation("null ray must be future-directed")
    d = W.direction
    other = d * (2 * eta(d, n) / eta(d, d)) - n
    if other.dt < 0:
        other = -other
    return LorentzPlane(W, n, other)


def plane_coordinates(plane: LorentzPlane, x00: Event, p: Event) -> tuple[Rat, Rat]:
    """(clock offset from x00, signed distance along the plane axis) of ``p``.

    Raises PreconditionViolation when ``p`` is off the plane.
    """
    u = plane.base.unit
    v = p - x00
    tau = eta(v, u)
    w = v - u * tau
    e = plane.axis
    xi = -eta(w, e)
    if not (w - e * xi).is_zero():
        raise PreconditionViolation(f"{p} does not lie in the plane")
    return tau, xi


def closed_form_point(plane: LorentzPlane, x00: Event, s, m: int, k: int) -> Event:
    s = as_rational(s)
    return x00 + plane.null_plus * (s * (m + k)) + plane.null_minus * (s * k)


# -- primitive constructions -------------------------------------------------

def _on_X(W: Worldline, p: Event, sign: int) -> Event:
    """X meets the future (sign=+1) or past light cone of ``p``; rational in-plane."""
    point = psi(W, p, sign)[1]
    if not point.is_rational:
        raise PreconditionViolation("cone meets the worldline at an irrational point")
    return point.to_event()


def _line_cone(a: Event, b: Event, apex: Event, sign: int) -> Event:
    """The point of line (a b) on the future (+1) or past light cone of ``apex``."""
    w, d = b - a, a - apex
    qa, qb, qc = eta(w, w), 2 * eta(w, d), eta(d, d)
    if qa == 0:
        if qb == 0:
            raise PreconditionViolation("line does not meet the cone in one point")
        roots = [-qc / qb]
    else:
        disc = rational_sqrt(qb * qb - 4 * qa * qc)
        if disc is None:
            raise PreconditionViolation("line meets the cone at irrational points")
        roots = sorted({(-qb + disc) / (2 * qa), (-qb - disc) / (2 * qa)})
    hits = []
    for lam in roots:
        p = a + w * lam
        off = p - apex
        if not off.is_zero() and off.dt * sign > 0:
            hits.append(p)
    if len(hits) != 1:
        raise PreconditionViolation("line does not meet the half cone in exactly one point")
    return hits[0]


def _line_sigma(W: Worldline, a: Event, b: Event, target: Event) -> Event:
    """The point of line (a b) standard-synchronous with ``target``."""
    ta, tb = radar_time(W, a), radar_time(W, b)
    if ta == tb:
        raise PreconditionViolation("line lies in a simultaneity slice")
    return a + (b - a) * ((radar_time(W, target) - ta) / (tb - ta))


# -- the grid ----------------------------------------------------------------

@dataclass(frozen=True)
class LatticeGrid:
    plane: LorentzPlane
    x00: Event
    scale: Rat
    depth: int
    points: dict = field(default_factory=dict)

    def __getitem__(self, index: tuple[int, int]) -> Event:
        return self.points[index]

    def indices(self) -> list[tuple[int, int]]:
        """Indices ordered by m + |k|, then m, then k."""
        return sorted(self.points, key=lambda mk: (mk[0] + abs(mk[1]), mk[0], mk[1]))


def build_grid(plane: LorentzPlane, x00: Event, s, depth: int,
               backward: bool = False) -> LatticeGrid:
    """Run the recurrence up to level ``depth`` (m + |k| <= depth).

    Forward rows (k >= 0):
      x10 = x00 + s n_plus, x01 = future cone of x10 on X,
      x_{n+1,0} on line (x00 x10) synchronous with x_{n-1,1},
      x_{0,n+1} = future cone of x_{n+1,0} on X,
      x_{n+1-k,k} = future cone of x_{n-k,k} on line (x_{n+1,0} x_{0,n+1}).

    Backward rows (k < 0) with ``backward=True``: where m <= |k| the forward
    recurrence is replayed under time reversal, starting from
    x_{1,-1} = x00 - s n_minus; where m > |k| the point is the future cone of
    x_{0,k} on line (x_{m+k,0} x_{0,m+k}).
    """
    W = plane.base
    s = as_rational(s)
    if s <= 0:
        raise PreconditionViolation("scale must be positive")
    if depth < 1:
        raise PreconditionViolation("depth must be at least 1")
    if not W.contains(x00):
        raise PreconditionViolation("x00 must lie on the worldline")

    pts: dict[tuple[int, int], Event] = {(0, 0): x00}
    pts[1, 0] = x00 + plane.null_plus * s
    pts[0, 1] = _on_X(W, pts[1, 0], +1)
    for n in range(1, depth):
        pts[n + 1, 0] = _line_sigma(W, x00, pts[1, 0], pts[n - 1, 1])
        pts[0, n + 1] = _on_X(W, pts[n + 1, 0], +1)
        for k in range(1, n + 1):
            pts[n + 1 - k, k] = _line_cone(pts[n + 1, 0], pts[0, n + 1], pts[n - k, k], +1)

    if backward:
        # mirror rows: x_{m,-j} for 0 <= m <= j
        mirror: dict[tuple[int, int], Event] = {(0, 0): x00}
        mirror[1, -1] = x00 - plane.null_minus * s
        mirror[0, -1] = _on_X(W, mirror[1, -1], -1)
        for n in range(1, depth):
            j = n + 1
            mirror[j, -j] = _line_sigma(W, x00, mirror[1, -1], mirror[n - 1, -n])
            mirror[0, -j] = _on_X(W, mirror[j, -j], -1)
            for m in range(1, j):
                mirror[m, -j] = _line_cone(mirror[j, -j], mirror[0, -j], mirror[m - 1, -n], -1)
        for (m, k), p in mirror.items():
            if m + abs(k) <= depth:
                pts[m, k] = p
        # wedge between the rows: m > j
        for j in range(1, depth):
            for m in range(j + 1, depth - j + 1):
                a, b = pts[m - j, 0], pts[0, m - j]
                pts[m, -j] = _line_cone(a, b, pts[0, -j], +1)

    points = {mk: p for mk, p in pts.items() if mk[0] + abs(mk[1]) <= depth}
    return LatticeGrid(plane, x00, s, depth, points)


def grid_csv(grid: LatticeGrid) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["m", "k", "t", "x", "y", "z"])
    for m, k in grid.indices():
        out.writerow([m, k, *(str(c) for c in grid[m, k])])
    return buf.getvalue()


# -- conic membership ----------------------------------------------------------

@dataclass(frozen=True)
class Member:
    index: tuple[int, int]
    scale: Rat
    side: int = 1

    verdict = "Member"


@dataclass(frozen=True)
class NotMember:
    verdict = "NotMember"


def lattice_conic_membership(plane: LorentzPlane, x00: Event, v,
                             y: Event) -> Union[Member, NotMember]:
    """Decide y in the future speed-v cone with apex x00 through the lattice.

    With v = p/q in lowest terms the cone carries the grid points of index
    (2p, q-p), reduced here by their gcd. The scale is read off the closed
    form and certified by rebuilding the grid and comparing the point.
    """
    v = as_rational(v)
    if not 0 < v < 1:
        raise PreconditionViolation("lattice membership needs 0 < v < 1")
    tau, xi = plane_coordinates(plane, x00, y)
    if tau == 0 and xi == 0:
        return Member((0, 0), Rat(0))
    side = 1 if xi >= 0 else -1
    r = xi * side
    if tau <= 0 or r != v * tau:
        return NotMember()
    p, q = v.numerator, v.denominator
    m, k = 2 * p, q - p
    g = gcd(m, k)
    m, k = int(m // g), int(k // g)
    working = plane if side > 0 else plane.flipped()
    s = r / (m * working.height)
    grid = build_grid(working, x00, s, m + k)
    if grid[m, k] != y:
        raise AssertionError(f"lattice replay disagrees at index {(m, k)}")
    return Member((m, k), s, side)


def sandwich_apexes(W: Worldline, apex_time, y: Event, v: QuadraticScalar,
                    lower: Rat, upper: Rat) -> Optional[tuple[QuadraticScalar, QuadraticScalar]]:
    """Apex clock times bracketing ``apex_time`` for rational speeds around ``v``.

    For a point y on the future speed-v cone from the apex, a rational
    ``lower`` < v puts y on a future cone whose apex is earlier, and
    ``upper`` > v on one whose apex is later. Returns the two apex times when
    both memberships and orderings hold exactly, else None.
    """
    if not lower < v < upper:
        raise PreconditionViolation("bounds must bracket v")
    tau, r2 = adapted_time_radius2(W, y)
    r = rational_sqrt(r2)
    if r is None:
        raise PreconditionViolation("point has irrational distance from the worldline")
    early = tau - r / lower
    late = tau - r / upper
    if not (early < apex_time < late):
        return None
    if not (conic_member_at(W, lower, +1, early, y) and conic_member_at(W, upper, +1, late, y)):
        return None
    return early, late

