"""Seeded property suites over the causal predicates and radar procedures.

Each suite returns a :class:`SuiteResult`; a failure carries the first
offending sample so it can be replayed exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .predicates import (
    collinear,
    common_lightcone_point,
    lambda_refutation,
    midpoint_certificate,
    on_lightcone,
    refutes_lambda,
    same_half_cone,
    same_half_cone_analytic,
)
from .relations import interval_via_clock, project, psi, radar_time
from .sampling import Sampler
from .scalars import Rat
from .spacetime import Event, Separation, eta, separation

__all__ = [
    "SUITES",
    "SuiteResult",
    "causal_pair_with_rational_interval",
    "run_suites",
    "spacelike_triple",
]


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    samples: int
    witness: Optional[tuple] = None


# -- samplers --------------------------------------------------------------

def _spacelike_step(rng: Sampler):
    while True:
        v = rng.vector(6, 4)
        if eta(v, v) < 0:
            return v


def spacelike_triple(rng: Sampler, collinear_triple: bool) -> tuple[Event, Event, Event]:
    """Pairwise spacelike-separated events, on one line if requested."""
    a = rng.event()
    b = a + _spacelike_step(rng)
    if collinear_triple:
        while True:
            lam = rng.fraction(4, 3)
            if lam not in (0, 1):
                return a, b, a + (b - a) * lam
    while True:
        c = a + _spacelike_step(rng)
        if separation(b, c) is Separation.SPACELIKE and not collinear(a, b, c):
            return a, b, c


def causal_pair_with_rational_interval(rng: Sampler) -> tuple[Event, Event]:
    """Timelike pair x, xp whose proper time is rational."""
    x = rng.event()
    return x, x + rng.unit_timelike() * rng.positive_fraction(6, 3)


# -- suites -----------------------------------------------------------------

def suite_common_point(root: Sampler, samples: int) -> SuiteResult:
    """No common light-cone point exactly for collinear spacelike triples."""
    for i in range(samples):
        rng = root.split(i)
        line = i % 2 == 0
        a, b, c = spacelike_triple(rng, line)
        m = common_lightcone_point(a, b, c)
        if (m is None) != collinear(a, b, c):
            return SuiteResult("common_lightcone_point", False, samples, (a, b, c))
        if m is not None and not all(on_lightcone(m, p) for p in (a, b, c)):
            return SuiteResult("common_lightcone_point", False, samples, (a, b, c, m))
    return SuiteResult("common_lightcone_point", True, samples)


def suite_midpoint(root: Sampler, samples: int) -> SuiteResult:
    """Empty triple intersection at the midpoint, a witness everywhere else."""
    for i in range(samples):
        rng = root.split(i)
        x, xp = causal_pair_with_rational_interval(rng)
        mid = x + (xp - x) / 2
        if not midpoint_certificate(x, xp, mid).empty:
            return SuiteResult("midpoint_certificate", False, samples, (x, xp, mid))
        lam = rng.fraction(3, 4)
        if lam == Rat(1, 2):
            lam = Rat(1, 3)
        m = x + (xp - x) * lam
        cert = midpoint_certificate(x, xp, m)
        if cert.empty or not all(on_lightcone(cert.witness, p) for p in (cert.a, cert.b, m)):
            return SuiteResult("midpoint_certificate", False, samples, (x, xp, m))
    return SuiteResult("midpoint_certificate", True, samples)


def suite_half_cone(root: Sampler, samples: int) -> SuiteResult:
    """Segment characterization of 'same half cone' agrees with time signs."""
    for i in range(samples):
        rng = root.split(i)
        e = rng.event()
        p = e + rng.future_causal(null=True) * rng.choice((1, -1))
        q = e + rng.future_causal(null=True) * rng.choice((1, -1))
        if same_half_cone(e, p, q) != same_half_cone_analytic(e, p, q):
            return SuiteResult("same_half_cone", False, samples, (e, p, q))
    return SuiteResult("same_half_cone", True, samples)


def suite_lambda_refutation(root: Sampler, samples: int) -> SuiteResult:
    """Timelike pairs admit an (r, x) showing lightlike separation is not implied."""
    for i in range(samples):
        rng = root.split(i)
        p = rng.event()
        q = p + rng.future_causal() + rng.unit_timelike()
        r, x = lambda_refutation(p, q)
        if not refutes_lambda(p, q, r, x):
            return SuiteResult("lambda_refutation", False, samples, (p, q, r, x))
    return SuiteResult("lambda_refutation", True, samples)


def suite_radar(root: Sampler, samples: int) -> SuiteResult:
    """Radar time equals the clock time of the orthogonal projection."""
    for i in range(samples):
        rng = root.split(i)
        W, p = rng.worldline(), rng.event()
        if radar_time(W, p) != W.clock(project(W, p)):
            return SuiteResult("radar_time", False, samples, (W, p))
    return SuiteResult("radar_time", True, samples)


def suite_interval(root: Sampler, samples: int) -> SuiteResult:
    """eta(p - o, p - o) is the product of the recentred radar clock times."""
    for i in range(samples):
        rng = root.split(i)
        W, p = rng.worldline(), rng.event()
        o = W.at(rng.fraction())
        if interval_via_clock(W, o, p) != eta(p - o, p - o):
            return SuiteResult("interval_via_clock", False, samples, (W, o, p))
        # the radar points are on the light cone of p
        for sign in (1, -1):
            if not on_lightcone(psi(W, p, sign)[1], p):
                return SuiteResult("interval_via_clock", False, samples, (W, o, p))
    return SuiteResult("interval_via_clock", True, samples)


SUITES: dict[str, Callable[[Sampler, int], SuiteResult]] = {
    "common_lightcone_point": suite_common_point,
    "midpoint_certificate": suite_midpoint,
    "same_half_cone": suite_half_cone,
    "lambda_refutation": suite_lambda_refutation,
    "radar_time": suite_radar,
    "interval_via_clock": suite_interval,
}


def run_suites(seed: int, samples: int) -> list[SuiteResult]:
    root = Sampler(seed)
    return [suite(root.split(i), samples) for i, suite in enumerate(SUITES.values())]
