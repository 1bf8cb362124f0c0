"""Exact simultaneity relations for an inertial observer in Minkowski spacetime."""

from .automorphisms import (
    AutomorphismSpec,
    PythagoreanEvent,
    apply,
    invariance_counterexample,
    phi_f_lightcone_audit,
    pythagorean_event,
    pythagorean_events,
    rotation_from_cayley,
)
from .errors import (
    DegenerateInput,
    IncommensurableRadicands,
    IrrationalInterval,
    IrrationalRadius,
    PreconditionViolation,
    SchemaError,
    SimultaneityError,
    ViewportError,
)
from .lattice import (
    LatticeGrid,
    LorentzPlane,
    Member,
    NotMember,
    build_grid,
    grid_csv,
    lattice_conic_membership,
    plane_from_null_ray,
)
from .predicates import (
    MidpointCertificate,
    collinear,
    common_lightcone_point,
    lightlike_segment_contains,
    midpoint_certificate,
    same_half_cone,
)
from .relations import (
    RationalPolynomial,
    RelationSpec,
    SoundnessReport,
    interval_via_clock,
    project,
    psi,
    radar_time,
    related,
    representative,
    soundness_report,
)
from .scalars import Ordering, QuadraticScalar, Rat, quad_compare, sqrt_rational
from .spacetime import (
    ORIGIN,
    TIME_AXIS,
    Event,
    EventQ,
    FourVector,
    Separation,
    Worldline,
    causal,
    eta,
    lightlike,
    precedes,
    separation,
)
from .svg import DiagramSpec, render_svg

__all__ = [
    "AutomorphismSpec",
    "DegenerateInput",
    "DiagramSpec",
    "Event",
    "EventQ",
    "FourVector",
    "IncommensurableRadicands",
    "IrrationalInterval",
    "IrrationalRadius",
    "LatticeGrid",
    "LorentzPlane",
    "Member",
    "MidpointCertificate",
    "NotMember",
    "ORIGIN",
    "Ordering",
    "PreconditionViolation",
    "PythagoreanEvent",
    "QuadraticScalar",
    "Rat",
    "RationalPolynomial",
    "RelationSpec",
    "SchemaError",
    "Separation",
    "SimultaneityError",
    "SoundnessReport",
    "TIME_AXIS",
    "ViewportError",
    "Worldline",
    "apply",
    "build_grid",
    "causal",
    "collinear",
    "common_lightcone_point",
    "eta",
    "grid_csv",
    "interval_via_clock",
    "invariance_counterexample",
    "lattice_conic_membership",
    "lightlike",
    "lightlike_segment_contains",
    "midpoint_certificate",
    "phi_f_lightcone_audit",
    "plane_from_null_ray",
    "precedes",
    "project",
    "psi",
    "pythagorean_event",
    "pythagorean_events",
    "quad_compare",
    "radar_time",
    "related",
    "render_svg",
    "representative",
    "rotation_from_cayley",
    "same_half_cone",
    "separation",
    "soundness_report",
    "sqrt_rational",
]

__version__ = "0.1.0"
