"""simulcli: JSON-in/JSON-out front end.

Exit codes: 0 success, 1 a property violation where none was expected,
2 malformed input (the message names the offending field).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import serialize as ser
from .audits import run_suites
from .automorphisms import apply, invariance_counterexample
from .errors import PreconditionViolation, SchemaError, SimultaneityError
from .lattice import build_grid, grid_csv, lattice_conic_membership, plane_from_null_ray
from .relations import project, radar_times, related, representative, soundness_report
from .spacetime import TIME_AXIS
from .svg import DiagramSpec, render_svg

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SchemaError("arguments", message)


def _json_arg(text: str, field: str):
    """Inline JSON, or the path of a file holding it."""
    stripped = text.lstrip()
    if stripped[:1] not in ("{", "[", '"'):
        try:
            stripped = Path(text).read_text()
        except OSError as exc:
            raise SchemaError(field, f"cannot read {text}: {exc.strerror}") from None
    try:
        return json.loads(stripped)
    except json.JSONDecodeError as exc:
        raise SchemaError(field, f"invalid JSON: {exc.msg}") from None


def _worldline(args):
    if args.worldline is None:
        return TIME_AXIS
    return ser.decode_worldline(_json_arg(args.worldline, "worldline"))


def _seed(value: str) -> int:
    try:
        seed = int(value, 0)
    except ValueError:
        raise SchemaError("seed", f"not an integer: {value!r}") from None
    if not 0 <= seed < 2**64:
        raise SchemaError("seed", "must be a 64-bit unsigned integer")
    return seed


def _positive(field: str):
    def parse(value: str) -> int:
        try:
            n = int(value)
        except ValueError:
            raise SchemaError(field, f"not an integer: {value!r}") from None
        if n <= 0:
            raise SchemaError(field, "must be positive")
        return n
    return parse


# -- subcommands -------------------------------------------------------------

def cmd_radar(args, out) -> int:
    W = _worldline(args)
    p = ser.decode_event(_json_arg(args.event, "event"), "event")
    t1, t2 = radar_times(W, p)
    out.write(ser.dumps({
        "t1": ser.encode(t1),
        "t2": ser.encode(t2),
        "t": ser.encode((t1 + t2) / 2),
        "projection": ser.encode(project(W, p)),
    }))
    return EXIT_OK


def cmd_relation(args, out) -> int:
    W = _worldline(args)
    spec = ser.decode_relation(_json_arg(args.relation, "relation"))
    raw = _json_arg(args.pairs, "pairs")
    if not isinstance(raw, list) or not raw:
        raise SchemaError("pairs", "expected a non-empty array of [event, event]")
    results = []
    for i, pair in enumerate(raw):
        if not isinstance(pair, list) or len(pair) != 2:
            raise SchemaError(f"pairs[{i}]", "expected [event, event]")
        p = ser.decode_event(pair[0], f"pairs[{i}][0]")
        q = ser.decode_event(pair[1], f"pairs[{i}][1]")
        results.append({
            "p": ser.encode(p),
            "q": ser.encode(q),
            "related": related(W, spec, p, q),
            "representatives": [ser.encode(representative(W, spec, p)),
                                 ser.encode(representative(W, spec, q))],
        })
    out.write(ser.dumps({
        "relation": ser.encode_relation(spec),
        "related": all(r["related"] for r in results),
        "results": results,
    }))
    return EXIT_OK


def cmd_soundness(args, out) -> int:
    W = _worldline(args)
    spec = ser.decode_relation(_json_arg(args.relation, "relation"))
    report = soundness_report(W, spec, args.seed, args.samples)
    out.write(ser.dumps(ser.encode_report(report)))
    return EXIT_OK


def cmd_invariance(args, out) -> int:
    W = _worldline(args)
    spec = ser.decode_relation(_json_arg(args.relation, "relation"))
    aut = ser.decode_automorphism(_json_arg(args.automorphism, "automorphism"))
    found = invariance_counterexample(W, spec, aut, args.seed, args.samples)
    doc = {
        "relation": ser.encode_relation(spec),
        "automorphism": ser.encode_automorphism(aut),
        "seed": args.seed,
        "samples": args.samples,
        "counterexample": None,
    }
    if found is not None:
        p, q = found
        doc["counterexample"] = {
            "p": ser.encode(p),
            "q": ser.encode(q),
            "images": [ser.encode(apply(aut, W, p)), ser.encode(apply(aut, W, q))],
        }
    out.write(ser.dumps(doc))
    return EXIT_VIOLATION if found is not None and args.expect_invariant else EXIT_OK


def cmd_lattice(args, out) -> int:
    W = _worldline(args)
    n = ser.decode_vector(_json_arg(args.null, "null"), "null")
    x00 = W.at(ser.decode_scalar(args.x00, "x00"))
    try:
        plane = plane_from_null_ray(W, n)
    except PreconditionViolation as exc:
        raise SchemaError("null", str(exc)) from None
    if args.member is not None:
        if args.v is None:
            raise SchemaError("v", "required with --member")
        v = ser.decode_scalar(args.v, "v")
        y = ser.decode_event(_json_arg(args.member, "member"), "member")
        try:
            verdict = lattice_conic_membership(plane, x00, v, y)
        except PreconditionViolation as exc:
            raise SchemaError("member", str(exc)) from None
        doc = {"v": str(v), "y": ser.encode(y), "verdict": verdict.verdict}
        if verdict.verdict == "Member":
            doc.update(index=list(verdict.index), scale=str(verdict.scale), side=verdict.side)
        out.write(ser.dumps(doc))
        return EXIT_OK
    scale = ser.decode_scalar(args.scale, "scale")
    if scale <= 0:
        raise SchemaError("scale", "must be positive")
    grid = build_grid(plane, x00, scale, args.depth, backward=args.backward)
    svg = None
    if args.svg:
        box = [ser.decode_scalar(c, f"viewport[{i}]") for i, c in enumerate(args.viewport.split(","))]
        try:
            svg = render_svg(DiagramSpec(tuple(box)), grid=grid)
        except SimultaneityError as exc:
            raise SchemaError("viewport", str(exc)) from None
    out.write(grid_csv(grid))
    if svg is not None:
        Path(args.svg).write_bytes(svg)
    return EXIT_OK


def cmd_audit(args, out) -> int:
    results = run_suites(args.seed, args.samples)
    doc = {
        "seed": args.seed,
        "samples": args.samples,
        "suites": {r.name: {"pass": r.passed, "witness": ser.encode(r.witness)} for r in results},
    }
    out.write(ser.dumps(doc))
    return EXIT_OK if all(r.passed for r in results) else EXIT_VIOLATION


# -- wiring ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="simulcli", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--worldline", help="Worldline JSON or file (default: time axis)")
        p.set_defaults(func=func)
        return p

    def sampled(p, samples=1000):
        p.add_argument("--seed", type=_seed, default=0)
        p.add_argument("--samples", type=_positive("samples"), default=samples)

    p = command("radar", cmd_radar, "radar times and projection of an event")
    p.add_argument("--event", required=True)

    p = command("relation", cmd_relation, "relatedness of event pairs")
    p.add_argument("--relation", required=True)
    p.add_argument("--pairs", required=True)

    p = command("soundness", cmd_soundness, "soundness report of a relation")
    p.add_argument("--relation", required=True)
    sampled(p)

    p = command("invariance", cmd_invariance, "search for an invariance counterexample")
    p.add_argument("--relation", required=True)
    p.add_argument("--automorphism", required=True)
    p.add_argument("--expect-invariant", action="store_true",
                   help="exit 1 when a counterexample is found")
    sampled(p)

    p = command("lattice", cmd_lattice, "light-cone lattice as CSV, or conic membership")
    p.add_argument("--null", default='["1","1","0","0"]', help="null ray of the plane")
    p.add_argument("--x00", default="0", help="clock time of the lattice origin")
    p.add_argument("--scale", default="1")
    p.add_argument("--depth", type=_positive("depth"), default=4)
    p.add_argument("--backward", action="store_true", help="include rows k < 0")
    p.add_argument("--svg", help="also write an SVG diagram to this path")
    p.add_argument("--viewport", default="-1,5,-1,9", help="xi_min,xi_max,tau_min,tau_max")
    p.add_argument("--member", help="decide conic membership of this event instead")
    p.add_argument("--v", help="conic speed p/q for --member")

    p = command("audit", cmd_audit, "run the causal predicate property suites")
    sampled(p, samples=200)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except SchemaError as exc:
        print(f"simulcli: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
