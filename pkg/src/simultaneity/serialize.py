"""JSON encodings of exact scalars, events and specs.

Rationals travel as strings ("3", "-1/2") so nothing passes through floats.
Decoders raise SchemaError naming the offending field.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .automorphisms import AutomorphismSpec
from .errors import PreconditionViolation, SchemaError
from .relations import RelationSpec, SoundnessReport, Verdict
from .scalars import QuadraticScalar, Rat, quad_normalize
from .spacetime import Event, EventQ, FourVector, Worldline

__all__ = [
    "decode_automorphism",
    "decode_event",
    "decode_quadratic",
    "decode_relation",
    "decode_scalar",
    "decode_worldline",
    "dumps",
    "encode",
    "encode_report",
]

_SIGNS = {"+": 1, "-": -1}


# -- encoding ------------------------------------------------------------------

def encode(value) -> Any:
    """JSON-ready form of any exact value produced by the library."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, QuadraticScalar):
        if value.is_rational:
            return str(value.to_fraction())
        return {"a": str(value.a), "b": str(value.b), "d": str(value.d)}
    if isinstance(value, (Event, FourVector, EventQ)):
        return [encode(c) for c in value]
    if isinstance(value, Worldline):
        return {"origin": encode(value.origin), "direction": encode(value.direction)}
    if isinstance(value, RelationSpec):
        return encode_relation(value)
    if isinstance(value, AutomorphismSpec):
        return encode_automorphism(value)
    if isinstance(value, (tuple, list)):
        return [encode(v) for v in value]
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, int):
        return value
    if isinstance(value, (Fraction, type(Rat(0)))):
        return str(Rat(value))
    raise TypeError(f"cannot encode {type(value).__name__}")


def encode_relation(spec: RelationSpec) -> dict:
    sign = "+" if spec.sign > 0 else "-"
    if spec.kind == "sigma":
        return {"kind": "sigma"}
    if spec.kind == "halfcone":
        return {"kind": "halfcone", "sign": sign}
    if spec.kind == "conic":
        return {"kind": "conic", "v": str(spec.v), "sign": sign}
    coeffs = list(spec.coeffs) or [Rat(0)]
    if coeffs[0] != 0:
        coeffs.insert(0, Rat(0))
    return {"kind": "revolution", "coeffs": [str(c) for c in coeffs]}


def encode_automorphism(aut: AutomorphismSpec) -> dict:
    k = aut.kind
    if k == "translation":
        return {"kind": k, "amount": str(aut.amount)}
    if k == "rotation":
        return {"kind": k, "cayley": [str(c) for c in aut.cayley]}
    if k == "scale":
        return {"kind": k, "center": str(aut.center), "alpha": str(aut.alpha)}
    if k == "time_reflection":
        return {"kind": k, "center": str(aut.center)}
    return {"kind": k, "a1": str(aut.a1), "a3": str(aut.a3)}


def _encode_verdict(v: Verdict) -> dict:
    return {"pass": v.passed, "witness": encode(v.witness), "note": v.note}


def encode_report(report: SoundnessReport) -> dict:
    return {
        "relation": encode_relation(report.spec),
        "seed": report.seed,
        "samples": report.samples,
        **{name: _encode_verdict(getattr(report, name)) for name in ("M", "B", "G", "BY")},
    }


def dumps(doc) -> str:
    """Canonical serialization: sorted keys, compact, trailing newline."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=True) + "\n"


# -- decoding ------------------------------------------------------------------

def decode_scalar(raw, field: str = "value") -> Rat:
    if isinstance(raw, bool) or not isinstance(raw, (str, int)):
        raise SchemaError(field, "expected a rational string such as \"3\" or \"-1/2\"")
    try:
        return Rat(Fraction(raw.strip()) if isinstance(raw, str) else raw)
    except (ValueError, ZeroDivisionError):
        raise SchemaError(field, f"not a rational number: {raw!r}") from None


def decode_quadratic(raw, field: str = "value") -> QuadraticScalar:
    if isinstance(raw, (str, int)) and not isinstance(raw, bool):
        return QuadraticScalar.rational(decode_scalar(raw, field))
    if not isinstance(raw, dict) or set(raw) != {"a", "b", "d"}:
        raise SchemaError(field, "expected {\"a\", \"b\", \"d\"}")
    a = decode_scalar(raw["a"], f"{field}.a")
    b = decode_scalar(raw["b"], f"{field}.b")
    d = decode_scalar(raw["d"], f"{field}.d")
    if d.denominator != 1 or d < 0:
        raise SchemaError(f"{field}.d", "radicand must be a non-negative integer")
    return quad_normalize(a, b, int(d))


def _four(raw, field: str) -> list[Rat]:
    if not isinstance(raw, list) or len(raw) != 4:
        raise SchemaError(field, "expected an array of 4 rational strings")
    return [decode_scalar(c, f"{field}[{i}]") for i, c in enumerate(raw)]


def decode_event(raw, field: str = "event") -> Event:
    return Event(*_four(raw, field))


def decode_vector(raw, field: str = "vector") -> FourVector:
    return FourVector(*_four(raw, field))


def decode_event_q(raw, field: str = "event") -> EventQ:
    if not isinstance(raw, list) or len(raw) != 4:
        raise SchemaError(field, "expected an array of 4 scalars")
    try:
        return EventQ(*(decode_quadratic(c, f"{field}[{i}]") for i, c in enumerate(raw)))
    except PreconditionViolation as exc:
        raise SchemaError(field, str(exc)) from None


def _object(raw, field: str, required: set, optional: set = frozenset()) -> dict:
    if not isinstance(raw, dict):
        raise SchemaError(field, "expected a JSON object")
    missing = required - set(raw)
    if missing:
        raise SchemaError(f"{field}.{sorted(missing)[0]}", "missing")
    extra = set(raw) - required - optional
    if extra:
        raise SchemaError(f"{field}.{sorted(extra)[0]}", "unexpected member")
    return raw


def decode_worldline(raw, field: str = "worldline") -> Worldline:
    obj = _object(raw, field, {"origin", "direction"})
    origin = decode_event(obj["origin"], f"{field}.origin")
    direction = decode_vector(obj["direction"], f"{field}.direction")
    try:
        return Worldline(origin, direction)
    except PreconditionViolation as exc:
        raise SchemaError(f"{field}.direction", str(exc)) from None


def _sign(raw, field: str) -> int:
    if raw not in _SIGNS:
        raise SchemaError(field, "sign must be \"+\" or \"-\"")
    return _SIGNS[raw]


def decode_relation(raw, field: str = "relation") -> RelationSpec:
    if not isinstance(raw, dict) or "kind" not in raw:
        raise SchemaError(f"{field}.kind", "missing")
    kind = raw["kind"]
    try:
        if kind == "sigma":
            _object(raw, field, {"kind"})
            return RelationSpec.sigma()
        if kind == "halfcone":
            _object(raw, field, {"kind", "sign"})
            return RelationSpec.halfcone(_sign(raw["sign"], f"{field}.sign"))
        if kind == "conic":
            _object(raw, field, {"kind", "v", "sign"})
            v = decode_scalar(raw["v"], f"{field}.v")
            if v <= 0:
                raise SchemaError(f"{field}.v", "speed must be positive")
            return RelationSpec.conic(v, _sign(raw["sign"], f"{field}.sign"))
        if kind == "revolution":
            _object(raw, field, {"kind", "coeffs"})
            cs = raw["coeffs"]
            if not isinstance(cs, list):
                raise SchemaError(f"{field}.coeffs", "expected an array")
            coeffs = [decode_scalar(c, f"{field}.coeffs[{i}]") for i, c in enumerate(cs)]
            if coeffs and coeffs[0] != 0:
                raise SchemaError(f"{field}.coeffs[0]", "profile must vanish at 0")
            return RelationSpec.revolution(coeffs)
    except PreconditionViolation as exc:
        if isinstance(exc, SchemaError):
            raise
        raise SchemaError(field, str(exc)) from None
    raise SchemaError(f"{field}.kind", f"unknown kind {kind!r}")


def decode_automorphism(raw, field: str = "automorphism") -> AutomorphismSpec:
    if not isinstance(raw, dict) or "kind" not in raw:
        raise SchemaError(f"{field}.kind", "missing")
    kind = raw["kind"]
    members = {
        "translation": {"amount"},
        "rotation": {"cayley"},
        "scale": {"center", "alpha"},
        "time_reflection": {"center"},
        "phi_f": {"a1", "a3"},
    }
    if kind not in members:
        raise SchemaError(f"{field}.kind", f"unknown kind {kind!r}")
    obj = _object(raw, field, {"kind"} | members[kind])
    args = {}
    for name in members[kind]:
        if name == "cayley":
            cs = obj[name]
            if not isinstance(cs, list) or len(cs) != 3:
                raise SchemaError(f"{field}.cayley", "expected an array of 3 rational strings")
            args[name] = tuple(decode_scalar(c, f"{field}.cayley[{i}]") for i, c in enumerate(cs))
        else:
            args[name] = decode_scalar(obj[name], f"{field}.{name}")
    try:
        return AutomorphismSpec(kind, **args)
    except SchemaError:
        raise
    except PreconditionViolation as exc:
        name = next(iter(sorted(members[kind])))
        if kind == "scale":
            name = "alpha"
        raise SchemaError(f"{field}.{name}", str(exc)) from None
