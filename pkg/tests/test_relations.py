from itertools import combinations

import pytest

from samples import class_sample
from simultaneity.automorphisms import pythagorean_event
from simultaneity.errors import PreconditionViolation
from simultaneity.relations import (
    RationalPolynomial,
    RelationSpec,
    conic_member_at,
    halfcone_formula,
    interval_via_clock,
    project,
    psi,
    radar_time,
    related,
    representative,
    soundness_report,
)
from simultaneity.sampling import Sampler, random_quadruple
from simultaneity.scalars import QuadraticScalar, Rat, sqrt_rational
from simultaneity.spacetime import ORIGIN, TIME_AXIS, Event, adapted_time_radius2, eta, precedes

SPECS = [
    RelationSpec.sigma(),
    RelationSpec.halfcone(1),
    RelationSpec.halfcone(-1),
    RelationSpec.conic(Rat(1, 3), 1),
    RelationSpec.conic(3, -1),
]


class TestProject:
    def test_time_axis(self):
        assert project(TIME_AXIS, Event(3, 1, 0, 0)) == Event(3, 0, 0, 0)

    def test_point_on_line(self, tilted):
        p = tilted.at(5)
        assert project(tilted, p) == p

    def test_tilted(self, tilted):
        pi = project(tilted, Event(0, 4, 0, 0))
        assert pi == Event(Rat(-15, 4), Rat(-9, 4), 0, 0)
        assert eta(Event(0, 4, 0, 0) - pi, tilted.direction) == 0


class TestPsi:
    def test_time_axis(self):
        p = Event(3, 1, 0, 0)
        assert psi(TIME_AXIS, p, +1)[0] == 4
        assert psi(TIME_AXIS, p, -1)[0] == 2

    def test_symmetric(self):
        p = Event(0, 3, 4, 0)
        assert psi(TIME_AXIS, p, +1)[0] == 5 and psi(TIME_AXIS, p, -1)[0] == -5

    def test_tilted(self, tilted):
        p = Event(0, 4, 0, 0)
        assert psi(tilted, p, +1)[0] == 2
        assert psi(tilted, p, -1)[0] == -8

    def test_points_lie_on_cone_and_line(self):
        root = Sampler(21)
        for i in range(200):
            rng = root.split(i)
            W, p = rng.worldline(), rng.event()
            later, earlier = psi(W, p, +1), psi(W, p, -1)
            assert later[0] >= earlier[0]
            for t, point in (later, earlier):
                off = point.offset(p)
                assert eta(off, off) == 0
                assert point == W.at_q(t)

    def test_bad_sign(self):
        with pytest.raises(ValueError):
            psi(TIME_AXIS, ORIGIN, 0)


class TestRadar:
    def test_examples(self, tilted):
        assert radar_time(TIME_AXIS, Event(3, 1, 0, 0)) == 3
        assert radar_time(TIME_AXIS, TIME_AXIS.at(7)) == 7
        assert radar_time(tilted, Event(0, 4, 0, 0)) == -3

    def test_matches_projection(self):
        root = Sampler(22)
        for i in range(1000):
            rng = root.split(i)
            W, p = rng.worldline(), rng.event()
            assert radar_time(W, p) == W.clock(project(W, p))


class TestIntervalViaClock:
    def test_examples(self):
        assert interval_via_clock(TIME_AXIS, ORIGIN, Event(3, 1, 0, 0)) == 8
        assert interval_via_clock(TIME_AXIS, ORIGIN, Event(0, 3, 4, 0)) == -25
        assert interval_via_clock(TIME_AXIS, ORIGIN, Event(2, 0, 0, 0)) == 4

    def test_origin_must_be_on_line(self):
        with pytest.raises(PreconditionViolation):
            interval_via_clock(TIME_AXIS, Event(0, 1, 0, 0), ORIGIN)

    def test_random(self):
        root = Sampler(23)
        irrational = 0
        for i in range(500):
            rng = root.split(i)
            W, p = rng.worldline(), rng.event()
            o = W.at(rng.fraction())
            irrational += not psi(W, p, 1)[0].is_rational
            assert interval_via_clock(W, o, p) == eta(p - o, p - o)
        assert irrational > 400


class TestRationalPolynomial:
    def test_requires_zero_constant(self):
        with pytest.raises(PreconditionViolation):
            RationalPolynomial((1, 1))

    def test_trims_and_evaluates(self):
        f = RationalPolynomial((0, 0, 1, 0, 0))
        assert f.degree == 2 and f(3) == 9
        assert f(sqrt_rational(2)) == 2


class TestRelationSpec:
    def test_canonical_forms(self):
        assert RelationSpec.sigma().profile().coefficients == ()
        assert RelationSpec.halfcone(-1).canonical() == RelationSpec.conic(1, -1).canonical()
        assert RelationSpec.conic(Rat(1, 3), 1).profile().coefficients == (0, 3)

    def test_invalid(self):
        with pytest.raises(PreconditionViolation):
            RelationSpec.conic(0)
        with pytest.raises(PreconditionViolation):
            RelationSpec("mystery")
        with pytest.raises(PreconditionViolation):
            RelationSpec.halfcone(2)


class TestRepresentative:
    def test_examples(self):
        p = Event(3, 1, 0, 0)
        assert representative(TIME_AXIS, RelationSpec.revolution((0, 0, 1)), p) == 2
        assert representative(TIME_AXIS, RelationSpec.conic(Rat(1, 3), 1), p) == 0
        assert representative(TIME_AXIS, RelationSpec.sigma(), p) == 3

    def test_related_examples(self):
        conic = RelationSpec.conic(Rat(1, 3), 1)
        assert related(TIME_AXIS, conic, Event(3, 1, 0, 0), Event(6, 2, 0, 0))
        assert related(TIME_AXIS, RelationSpec.sigma(), Event(3, 1, 0, 0), Event(3, 0, 2, 0))
        assert not related(TIME_AXIS, conic, Event(3, 1, 0, 0), Event(4, 1, 0, 0))

    def test_irrational_representatives_compare_exactly(self):
        conic = RelationSpec.conic(1, 1)
        p, q = Event(0, 1, 1, 0), Event(1, 1, 1, 0)
        assert representative(TIME_AXIS, conic, p) == -sqrt_rational(2)
        assert not related(TIME_AXIS, conic, p, q)

    def test_matches_adapted_coordinates(self):
        root = Sampler(24)
        for spec in SPECS + [RelationSpec.revolution((0, Rat(1, 2), 0, 1))]:
            f = spec.profile()
            for i in range(200):
                rng = root.split(i)
                W, p = rng.worldline(), rng.event()
                tau, r2 = adapted_time_radius2(W, p)
                assert representative(W, spec, p) == tau - f(sqrt_rational(r2))


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.label())
def test_related_is_an_equivalence(spec):
    W = Sampler(25).worldline()
    sample = class_sample(W, spec, 26, bases=40)
    assert len(sample) == 120
    reps = {p: representative(W, spec, p) for p in sample}
    for p in sample:
        assert related(W, spec, p, p)
    for p, q in combinations(sample, 2):
        assert related(W, spec, p, q) == related(W, spec, q, p) == (reps[p] == reps[q])
    linked = 0
    for p, q in combinations(sample, 2):
        if reps[p] == reps[q]:
            for r in sample:
                if reps[q] == reps[r]:
                    linked += 1
                    assert related(W, spec, p, r)
    assert linked > 0


@pytest.mark.parametrize("v, sign", [(Rat(1, 3), 1), (Rat(1, 2), -1), (Rat(2), 1), (Rat(3), -1)])
def test_conic_members_satisfy_defining_equation(v, sign):
    spec = RelationSpec.conic(v, sign)
    root = Sampler(27)
    for i in range(200):
        rng = root.split(i)
        W = rng.worldline()
        y = pythagorean_event(W, random_quadruple(rng), rng.fraction(), rng.positive_fraction(3, 4)).event
        tau = representative(W, spec, y)
        assert tau.is_rational
        assert conic_member_at(W, v, sign, tau, y)
        assert not conic_member_at(W, v, -sign, tau, y) or W.contains(y)


@pytest.mark.parametrize("sign", [1, -1])
def test_halfcone_matches_explicit_formula(sign):
    spec = RelationSpec.halfcone(sign)
    root = Sampler(28)
    W = root.worldline()
    for i in range(300):
        rng = root.split(i)
        x = rng.event()
        if W.contains(x):
            continue
        if rng.integer(0, 1):
            # a class partner on the same half cone
            apex = representative(W, spec, x)
            quad = random_quadruple(rng)
            scale = rng.positive_fraction(3, 4)
            if not apex.is_rational:
                continue
            y = pythagorean_event(W, quad, apex.to_fraction() + sign * scale * quad[3], scale).event
        else:
            y = rng.event()
        if W.contains(y):
            continue
        assert related(W, spec, x, y) == halfcone_formula(W, x, y, sign)


def test_sigma_is_orthogonality():
    root = Sampler(29)
    spec = RelationSpec.sigma()
    for i in range(500):
        rng = root.split(i)
        W, p, q = rng.worldline(), rng.event(), rng.event()
        a = W.at(rng.fraction())
        b = a + W.direction * rng.positive_fraction()
        assert related(W, spec, p, q) == (eta(p - q, a - b) == 0)
        # a synchronous partner is always available
        partner = p + W.frame()[2] * rng.fraction()
        assert related(W, spec, p, partner) and eta(p - partner, a - b) == 0


class TestSoundness:
    def test_sigma_passes_everything(self):
        report = soundness_report(TIME_AXIS, RelationSpec.sigma(), 42, 2000)
        assert report.M.passed and report.B.passed and report.G.passed and report.BY.passed

    def test_slow_cone_fails_by_and_g(self):
        report = soundness_report(TIME_AXIS, RelationSpec.conic(Rat(1, 2), 1), 42, 2000)
        assert not report.BY.passed
        assert report.BY.witness == (ORIGIN, Event(1, Rat(9, 10), 0, 0))
        assert not report.G.passed
        p, q, _ = report.G.witness
        assert (p, q) == (Event(2, 1, 0, 0), Event(4, 2, 0, 0))
        assert report.M.passed and report.B.passed

    def test_witnesses_reverify(self):
        for spec in (RelationSpec.conic(Rat(1, 3), 1), RelationSpec.conic(Rat(2, 3), -1),
                     RelationSpec.revolution((0, 0, 1))):
            W = Sampler(30).worldline()
            report = soundness_report(W, spec, 5, 500)
            if not report.BY.passed:
                e1, e2 = report.BY.witness
                assert precedes(e1, e2)
                assert representative(W, spec, e2) < representative(W, spec, e1)
            if not report.G.passed:
                p, q, w = report.G.witness
                assert p != q and 0 < w < 1
                d = q - p
                assert eta(d, d) > 0
                assert related(W, spec, p, q)
            x, y = report.M.witness
            assert W.contains(x) and not W.contains(y) and related(W, spec, x, y)

    @pytest.mark.parametrize("spec", [RelationSpec.conic(1, 1), RelationSpec.conic(3, 1),
                                      RelationSpec.conic(3, -1), RelationSpec.sigma()],
                             ids=lambda s: s.label())
    def test_fast_cones_respect_causal_order(self, spec):
        assert soundness_report(TIME_AXIS, spec, 7, 3000).BY.passed

    def test_needs_samples(self):
        with pytest.raises(PreconditionViolation):
            soundness_report(TIME_AXIS, RelationSpec.sigma(), 1, 0)


def test_quadratic_equality_normal_forms():
    # the same number reached by different routes compares equal
    assert QuadraticScalar(0, 1, 8) == QuadraticScalar(0, 2, 2)
