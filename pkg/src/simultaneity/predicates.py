"""Causal predicates decided exactly: collinearity through light cones,
half-cone membership, lightlike segments and the midpoint certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DegenerateInput, IrrationalInterval, PreconditionViolation
from .scalars import QuadraticScalar, Rat, sqrt_rational
from .spacetime import (
    Event,
    EventQ,
    FourVector,
    Separation,
    _boost_frame,
    eta,
    lightlike,
    rational_sqrt,
    separation,
)

__all__ = [
    "EventQ",
    "MidpointCertificate",
    "collinear",
    "common_lightcone_point",
    "lightlike_segment_contains",
    "midpoint_certificate",
    "on_lightcone",
    "same_half_cone",
    "same_half_cone_analytic",
    "sphere_pair",
]

_METRIC = (1, -1, -1, -1)


# -- exact linear algebra over Q ---------------------------------------------

def _solve_affine(rows: list[list[Rat]], rhs: list[Rat]):
    """Solution set of ``rows @ x = rhs`` as (particular, kernel basis), or None."""
    n = len(rows[0])
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                k = m[i][col]
                m[i] = [a - k * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    if any(row[n] != 0 and all(v == 0 for v in row[:n]) for row in m):
        return None
    x0 = [Rat(0)] * n
    for i, col in enumerate(pivots):
        x0[col] = m[i][n]
    basis = []
    for free in (c for c in range(n) if c not in pivots):
        v = [Rat(0)] * n
        v[free] = Rat(1)
        for i, col in enumerate(pivots):
            v[col] = -m[i][free]
        basis.append(v)
    return x0, basis


def _congruence_diagonalize(A: list[list[Rat]]):
    """Invertible P with P^T A P diagonal, by symmetric Gaussian elimination."""
    k = len(A)
    M = [list(row) for row in A]
    P = [[Rat(int(i == j)) for j in range(k)] for i in range(k)]

    def apply(E):
        nonlocal M, P
        Et = [list(col) for col in zip(*E)]
        M = _matmul(Et, _matmul(M, E))
        P = _matmul(P, E)

    for i in range(k):
        if M[i][i] == 0:
            j = next((j for j in range(i + 1, k) if M[j][j] != 0), None)
            if j is not None:
                E = [[Rat(int(a == b)) for b in range(k)] for a in range(k)]
                E[i][i] = E[j][j] = Rat(0)
                E[i][j] = E[j][i] = Rat(1)
                apply(E)
            else:
                j = next((j for j in range(i + 1, k) if M[i][j] != 0), None)
                if j is None:
                    continue
                # e_i <- e_i + e_j makes the pivot 2*M[i][j]
                E = [[Rat(int(a == b)) for b in range(k)] for a in range(k)]
                E[j][i] = Rat(1)
                apply(E)
        E = [[Rat(int(a == b)) for b in range(k)] for a in range(k)]
        for j in range(i + 1, k):
            E[i][j] = -M[i][j] / M[i][i]
        apply(E)
    return [M[i][i] for i in range(k)], P


def _matmul(A, B):
    return [[sum((A[i][t] * B[t][j] for t in range(len(B))), Rat(0))
             for j in range(len(B[0]))] for i in range(len(A))]


def _quadric_zero(A, b, c) -> Optional[list[QuadraticScalar]]:
    """A real zero of g(t) = t^T A t + 2 b^T t + c with one shared radical.

    After congruence diagonalization g = sum D_i u_i^2 + 2 beta_i u_i + c;
    completing squares reduces the question to the sign pattern of D and
    the remaining constant.
    """
    k = len(A)
    D, P = _congruence_diagonalize(A)
    beta = [sum((P[t][i] * b[t] for t in range(k)), Rat(0)) for i in range(k)]
    u = [Rat(0)] * k
    const = c
    linear = None
    for i in range(k):
        if D[i] != 0:
            u[i] = -beta[i] / D[i]
            const -= beta[i] * beta[i] / D[i]
        elif beta[i] != 0 and linear is None:
            linear = i
    uq = [QuadraticScalar.rational(x) for x in u]
    if linear is not None:
        # g is unbounded both ways along u_linear: solve 2 beta u + const = 0
        uq[linear] = QuadraticScalar.rational(-const / (2 * beta[linear]))
    elif const != 0:
        i = next((i for i in range(k) if D[i] != 0 and (D[i] > 0) != (const > 0)), None)
        if i is None:
            return None
        uq[i] = uq[i] + sqrt_rational(-const / D[i])
    return [sum((P[i][j] * uq[j] for j in range(k)), QuadraticScalar.rational(0))
            for i in range(k)]


def on_lightcone(m: EventQ, a) -> bool:
    d = m.offset(a)
    return eta(d, d) == 0


# -- predicates --------------------------------------------------------------

def collinear(a: Event, b: Event, c: Event) -> bool:
    """b - a and c - a linearly dependent (all 2x2 minors vanish)."""
    u, v = list(b - a), list(c - a)
    return all(u[i] * v[j] == u[j] * v[i] for i in range(4) for j in range(i + 1, 4))


def common_lightcone_point(a: Event, b: Event, c: Event) -> Optional[EventQ]:
    """Some point on the light cones of a, b and c, or None if there is none.

    Differences of the cone equations are linear in m; on the solution space
    the remaining cone equation is a quadric whose real zeros are found exactly.
    """
    if a == b or b == c or a == c:
        raise DegenerateInput("events must be pairwise distinct")

    def row(p, q):
        # eta(m, p - q) = (eta(p, p) - eta(q, q)) / 2
        d = p - q
        coeffs = [g * x for g, x in zip(_METRIC, d)]
        return coeffs, (eta(p, p) - eta(q, q)) / 2

    r1, h1 = row(a, b)
    r2, h2 = row(a, c)
    sol = _solve_affine([r1, r2], [h1, h2])
    if sol is None:
        return None
    m0, basis = sol
    # g(t) = eta(m0 + N t - a, same)
    w0 = [x - y for x, y in zip(m0, a)]
    k = len(basis)
    A = [[eta(basis[i], basis[j]) for j in range(k)] for i in range(k)]
    bb = [eta(basis[i], w0) for i in range(k)]
    t = _quadric_zero(A, bb, eta(w0, w0))
    if t is None:
        return None
    coords = []
    for j in range(4):
        acc = QuadraticScalar.rational(m0[j])
        for i in range(k):
            acc = acc + t[i] * basis[i][j]
        coords.append(acc)
    m = EventQ(*coords)
    assert on_lightcone(m, a) and on_lightcone(m, b) and on_lightcone(m, c)
    return m


def same_half_cone_analytic(e: Event, p: Event, q: Event) -> bool:
    return ((p - e).dt > 0) == ((q - e).dt > 0)


def same_half_cone(e: Event, p: Event, q: Event) -> bool:
    """p and q on one half of the light cone of e, via the open segment ]pq[.

    Every m on ]pq[ must be causal to e and differ from e. With m(s) = p + s(q-p)
    the map s -> eta(m(s)-e, m(s)-e) is a quadratic whose sign on (0,1) is
    settled from its coefficients and vertex.
    """
    if p == e or q == e or not lightlike(e, p) or not lightlike(e, q):
        raise PreconditionViolation("p and q must be distinct from e and on its light cone")
    if p == q:
        return True
    u, w = p - e, q - p
    c2, c1, c0 = eta(w, w), 2 * eta(u, w), eta(u, u)

    def g(s):
        return (c2 * s + c1) * s + c0

    # minimum of g on [0, 1]: endpoints or the vertex when it lies inside
    candidates = [g(Rat(0)), g(Rat(1))]
    if c2 > 0:
        vertex = -c1 / (2 * c2)
        if 0 < vertex < 1:
            candidates.append(g(vertex))
    if min(candidates) < 0:
        return False
    # e on the open segment?
    d = e - p
    if collinear(p, q, e):
        comps = [(dv, wv) for dv, wv in zip(d, w) if wv != 0]
        s = comps[0][0] / comps[0][1]
        if 0 < s < 1:
            return False
    return True


def lightlike_segment_contains(p: Event, q: Event, r: Event) -> bool:
    """r in the closed segment [pq] of a lightlike pair."""
    if p == q or not lightlike(p, q):
        raise PreconditionViolation("p and q must be distinct and lightlike separated")
    if not collinear(p, q, r):
        return False
    w, d = q - p, r - p
    i = next(i for i, x in enumerate(w) if x != 0)
    s = list(d)[i] / list(w)[i]
    return 0 <= s <= 1


# -- midpoint certificate ----------------------------------------------------

@dataclass(frozen=True)
class MidpointCertificate:
    a: Event
    b: Event
    witness: Optional[EventQ]

    @property
    def empty(self) -> bool:
        return self.witness is None

    @property
    def verdict(self) -> str:
        return "EmptyIntersection" if self.witness is None else "Witness"


def _orthonormal_spatial(delta: FourVector) -> FourVector:
    """First rest-frame spatial axis of the timelike direction ``delta``."""
    n = rational_sqrt(eta(delta, delta))
    if n is None:
        raise IrrationalInterval("proper time between the pair is not rational")
    u = delta / n if delta.dt > 0 else -delta / n
    return _boost_frame(u)[1]


def sphere_pair(x: Event, xp: Event) -> tuple[Event, Event]:
    """Antipodal pair on the 2-sphere where the light cones of x and xp meet."""
    delta = xp - x
    centre = x + delta / 2
    e = _orthonormal_spatial(delta)
    radius = rational_sqrt(eta(delta, delta)) / 2
    return centre + e * radius, centre - e * radius


def midpoint_certificate(x: Event, xp: Event, m: Event) -> MidpointCertificate:
    """Decide whether the light cones of a, b, m miss each other.

    a, b is the canonical antipodal pair on the intersection of the light
    cones of x and xp; the triple intersection is empty exactly when m is
    the midpoint of [x xp].
    """
    if separation(x, xp) is not Separation.TIMELIKE:
        raise PreconditionViolation("x and xp must be timelike separated")
    if not collinear(x, xp, m):
        raise PreconditionViolation("m must lie on the line through x and xp")
    a, b = sphere_pair(x, xp)
    if m in (a, b):
        raise DegenerateInput("m coincides with the sphere pair")
    return MidpointCertificate(a, b, common_lightcone_point(a, b, m))


def lambda_refutation(p: Event, q: Event) -> Optional[tuple[Event, Event]]:
    """For a timelike pair, an (r, x) refuting the lightlike characterization.

    r is the midpoint of [pq] and x = r + w with w orthogonal to q - p and
    small enough that x stays causal to both ends while spacelike to r.
    Returns None when p, q are not timelike separated.
    """
    if separation(p, q) is not Separation.TIMELIKE:
        return None
    delta = q - p
    r = p + delta / 2
    for axis in (FourVector(0, 1, 0, 0), FourVector(0, 0, 1, 0), FourVector(0, 0, 0, 1)):
        w = axis - delta * (eta(axis, delta) / eta(delta, delta))
        if not w.is_zero():
            break
    half = eta(delta, delta) / 4
    scale = Rat(1)
    while -eta(w, w) * scale * scale > half:
        scale /= 2
    return r, r + w * scale


def refutes_lambda(p: Event, q: Event, r: Event, x: Event) -> bool:
    """x causal to p and q but not to r, for r on [pq]."""
    def k(a, b):
        d = a - b
        return eta(d, d) >= 0
    return k(x, p) and k(x, q) and not k(x, r)


def cone_shared(points: Sequence[Event], m: EventQ) -> bool:
    return all(on_lightcone(m, p) for p in points)
