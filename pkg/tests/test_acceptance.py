"""Acceptance gate: ten exact, seeded criteria.

Each test is named ``test_criterion_NN_<label>``; conftest prints one
PASS/FAIL line per criterion at the end of the run.
"""

import random
import subprocess
import sys
from itertools import combinations

from samples import affine_generators, class_sample
from simultaneity.audits import causal_pair_with_rational_interval, spacelike_triple
from simultaneity.automorphisms import (
    AutomorphismSpec,
    apply,
    class_partner,
    invariance_counterexample,
    phi_f_lightcone_audit,
    pythagorean_event,
)
from simultaneity.lattice import build_grid, closed_form_point, plane_from_null_ray
from simultaneity.predicates import collinear, common_lightcone_point, midpoint_certificate, on_lightcone
from simultaneity.relations import (
    RelationSpec,
    conic_member,
    interval_via_clock,
    project,
    psi,
    radar_time,
    related,
    representative,
    soundness_report,
)
from simultaneity.sampling import Sampler, random_quadruple
from simultaneity.scalars import Rat, sqrt_rational
from simultaneity.spacetime import TIME_AXIS, FourVector, adapted_time_radius2, eta, precedes


def test_criterion_01_radar_equals_projection_clock():
    root = Sampler(1001)
    for i in range(1000):
        rng = root.split(i)
        W, p = rng.worldline(), rng.event()
        assert radar_time(W, p) == W.clock(project(W, p))


def test_criterion_02_interval_from_clock():
    root = Sampler(1002)
    irrational = 0
    for i in range(1000):
        rng = root.split(i)
        W, p = rng.worldline(), rng.event()
        o = W.at(rng.fraction())
        (t1, _), (t2, _) = psi(W, p, -1), psi(W, p, +1)
        irrational += not t1.is_rational
        c = W.clock(o)
        interval = eta(p - o, p - o)
        assert (t1 - c) * (t2 - c) == interval
        assert interval_via_clock(W, o, p) == interval
    assert irrational >= 500


def test_criterion_03_common_point_none_iff_collinear():
    root = Sampler(1003)
    lines = 0
    for i in range(500):
        a, b, c = spacelike_triple(root.split(i), i % 2 == 0)
        is_line = collinear(a, b, c)
        lines += is_line
        m = common_lightcone_point(a, b, c)
        assert (m is None) == is_line
        if m is not None:
            assert all(on_lightcone(m, x) for x in (a, b, c))
    assert 0 < lines < 500


def test_criterion_04_midpoint_certificate():
    root = Sampler(1004)
    witnesses = 0
    for i in range(200):
        rng = root.split(i)
        x, xp = causal_pair_with_rational_interval(rng)
        assert midpoint_certificate(x, xp, x + (xp - x) * Rat(1, 2)).empty
        lam = rng.fraction(3, 4)
        while lam in (0, Rat(1, 2)):
            lam = rng.fraction(3, 4)
        m = x + (xp - x) * lam
        cert = midpoint_certificate(x, xp, m)
        assert cert.verdict == "Witness"
        assert all(on_lightcone(cert.witness, e) for e in (cert.a, cert.b, m))
        witnesses += 1
    assert witnesses == 200


def test_criterion_05_lattice():
    plane = plane_from_null_ray(TIME_AXIS, FourVector(1, 1, 0, 0))
    x00 = TIME_AXIS.at(0)
    # (2p, q - p) sits at level p + q, so q <= 8 needs depth 15
    grid = build_grid(plane, x00, 1, 15)
    for q in range(2, 9):
        for p in range(1, q):
            assert conic_member(TIME_AXIS, Rat(p, q), +1, x00, grid[2 * p, q - p])

    tilted = Sampler(1005).worldline()
    cases = [(plane, x00, Rat(1))]
    rng = Sampler(1006)
    tilted_plane = plane_from_null_ray(tilted, rng.future_causal(null=True))
    cases.append((tilted_plane, tilted.at(rng.fraction()), rng.positive_fraction(3, 3)))
    for pl, origin, s in cases:
        g = build_grid(pl, origin, s, 12)
        for (m, k), point in g.points.items():
            assert m + k <= 12
            assert point == closed_form_point(pl, origin, s, m, k)
            if m > 0:
                assert conic_member(pl.base, Rat(m, 2 * k + m), +1, origin, point)
        assert len(g.points) == 13 * 14 // 2


EQUIVALENCE_SPECS = [
    RelationSpec.sigma(),
    RelationSpec.halfcone(1),
    RelationSpec.halfcone(-1),
    RelationSpec.conic(Rat(1, 3), 1),
    RelationSpec.conic(Rat(1, 3), -1),
    RelationSpec.conic(3, 1),
    RelationSpec.conic(3, -1),
]


def _equivalence_axioms(W, spec, sample):
    reps = [representative(W, spec, p) for p in sample]
    for p in sample:
        assert related(W, spec, p, p)
    classes: dict = {}
    for i, r in enumerate(reps):
        classes.setdefault(r, []).append(i)
    assert any(len(members) >= 3 for members in classes.values())
    # symmetry and transitivity inside every class, checked through related()
    for members in classes.values():
        for i, j in combinations(members, 2):
            assert related(W, spec, sample[i], sample[j]) and related(W, spec, sample[j], sample[i])
    # unrelated across classes, both orders, on a seeded subset of pairs
    pick = random.Random(len(sample))
    pairs = [(i, j) for i, j in combinations(range(len(sample)), 2) if reps[i] != reps[j]]
    for i, j in pick.sample(pairs, 1500):
        assert not related(W, spec, sample[i], sample[j])
        assert not related(W, spec, sample[j], sample[i])


def test_criterion_06_classified_relations_are_invariant():
    W = Sampler(1007).worldline()
    generators = affine_generators(1008, 20)
    for n, spec in enumerate(EQUIVALENCE_SPECS):
        sample = class_sample(W, spec, 1009 + n, bases=100)
        assert len(sample) == 300
        _equivalence_axioms(W, spec, sample)
        for k, aut in enumerate(generators):
            assert invariance_counterexample(W, spec, aut, 100 * n + k, 30) is None, (spec, aut)

    reflect = AutomorphismSpec.time_reflection(Rat(1, 2))
    root = Sampler(1010)
    for v in (Rat(1, 3), Rat(3)):
        plus, minus = RelationSpec.conic(v, 1), RelationSpec.conic(v, -1)
        for i in range(300):
            rng = root.split(i)
            p = pythagorean_event(W, random_quadruple(rng), rng.fraction(), rng.positive_fraction(3, 4)).event
            q = class_partner(W, plus, p, rng) if i % 2 else rng.event()
            assert related(W, plus, p, q) == related(W, minus, apply(reflect, W, p), apply(reflect, W, q))


def test_criterion_07_causal_order_dichotomy():
    for v in (Rat(1, 3), Rat(1, 2), Rat(2, 3)):
        spec = RelationSpec.conic(v, 1)
        report = soundness_report(TIME_AXIS, spec, 42, 10000)
        assert not report.BY.passed, v
        e1, e2 = report.BY.witness
        assert precedes(e1, e2) and e1 != e2
        assert representative(TIME_AXIS, spec, e2) < representative(TIME_AXIS, spec, e1)
    for spec in (RelationSpec.conic(1, 1), RelationSpec.conic(1, -1),
                 RelationSpec.conic(3, 1), RelationSpec.conic(3, -1), RelationSpec.sigma()):
        assert soundness_report(TIME_AXIS, spec, 42, 10000).BY.passed, spec.label()


def test_criterion_08_representative_matches_adapted_coordinates():
    root = Sampler(1011)
    for coeffs in ((0, 0, 1), (0, 0, 0, 1), (0, Rat(1, 2), 0, 1)):
        spec = RelationSpec.revolution(coeffs)
        f = spec.profile()
        irrational = 0
        for i in range(500):
            rng = root.split(i)
            W, p = rng.worldline(), rng.event()
            tau, r2 = adapted_time_radius2(W, p)
            r = sqrt_rational(r2)
            irrational += not r.is_rational
            assert representative(W, spec, p) == tau - f(r)
        assert irrational >= 250


def test_criterion_09_cubic_time_warp():
    phi = AutomorphismSpec.phi_f(0, 1)
    W = Sampler(1012).worldline()
    assert phi_f_lightcone_audit(phi, W, 1013, 500) is None
    assert invariance_counterexample(W, RelationSpec.sigma(), phi, 1014, 500) is not None
    for sign in (1, -1):
        assert invariance_counterexample(W, RelationSpec.halfcone(sign), phi, 1015, 500) is None


CLI_FIXTURES = {
    "radar": ["radar", "--event", '["3","1","0","0"]'],
    "relation": ["relation", "--relation", '{"kind":"sigma"}',
                 "--pairs", '[[["3","1","0","0"],["3","0","2","0"]]]'],
    "soundness": ["soundness", "--relation", '{"kind":"conic","v":"1/2","sign":"+"}',
                  "--seed", "42", "--samples", "2000"],
    "invariance": ["invariance", "--relation", '{"kind":"sigma"}',
                   "--automorphism", '{"kind":"phi_f","a1":"0","a3":"1"}', "--samples", "200"],
    "lattice": ["lattice", "--depth", "6", "--backward", "--svg", "{svg}"],
    "membership": ["lattice", "--member", '["6","2","0","0"]', "--v", "1/3"],
    "audit": ["audit", "--seed", "7", "--samples", "30"],
}


def test_criterion_10_cli_determinism(tmp_path):
    for name, argv in CLI_FIXTURES.items():
        outputs = []
        for run in range(3):
            svg = tmp_path / f"{name}-{run}.svg"
            args = [a.replace("{svg}", str(svg)) for a in argv]
            proc = subprocess.run([sys.executable, "-m", "simultaneity.cli", *args],
                                  capture_output=True, check=False)
            assert proc.returncode == 0, (name, proc.stderr)
            outputs.append((proc.stdout, svg.read_bytes() if svg.exists() else None))
        assert outputs[0][0], name
        assert outputs[0] == outputs[1] == outputs[2], name
