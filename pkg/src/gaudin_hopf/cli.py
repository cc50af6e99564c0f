"""Command-line interface: ``gaudin-hopf <subcommand> [flags]``.

Exit codes: 0 success, 2 domain error, 3 verification failure, 64 usage
error, 65 scenario schema error.  Machine output is JSON on standard output;
figures are written to ``--out``.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

import jsonschema
import numpy as np

from .emit import FORMATS, dumps, emit_figure
from .linear import FixedPoint, Side, classify, dnu2_printed, thresholds, unfolding
from .model import PARAM_KEYS, DomainError, ModelParams
from .momentum import FigureData, PointType, detect_events, figure_data, rank0_markers, sample_image

EXIT_OK, EXIT_DOMAIN, EXIT_VERIFY, EXIT_USAGE, EXIT_SCHEMA = 0, 2, 3, 64, 65
SUBCOMMANDS = ("classify", "thresholds", "normal-form", "unfold", "image", "events", "sweep", "verify")

_NUMBER = {"oneOf": [{"type": "number"}, {"type": "string", "pattern": r"^\s*-?\d+(\s*/\s*\d+)?\s*$"}]}
SCENARIO_SCHEMA = {
    "type": "object",
    "required": ["name", "params"],
    "additionalProperties": False,
    "properties": {
        "name": {"type": "string", "minLength": 1},
        "description": {"type": "string"},
        "params": {
            "type": "object",
            "additionalProperties": False,
            "properties": {k: _NUMBER for k in PARAM_KEYS},
        },
        "t4_values": {"type": "array", "items": _NUMBER},
        "t4_sweep": {
            "oneOf": [
                {"type": "array", "items": _NUMBER, "minItems": 1},
                {"type": "object", "required": ["start", "stop", "num"], "additionalProperties": False,
                 "properties": {"start": _NUMBER, "stop": _NUMBER, "num": {"type": "integer", "minimum": 1}}},
            ]
        },
        "t4_range": {"type": "array", "items": _NUMBER, "minItems": 2, "maxItems": 2},
        "commands": {"type": "array", "items": {"enum": list(SUBCOMMANDS)}},
        "output_dir": {"type": "string"},
    },
}


class UsageError(Exception):
    """Bad command-line usage (exit 64)."""


class SchemaError(Exception):
    """A scenario file does not match the schema (exit 65)."""

    def __init__(self, errors: list[str]):
        super().__init__("; ".join(errors))
        self.errors = errors


def _num(v):
    """A scenario number: ints and "p/q" strings stay exact, floats stay floats."""
    if isinstance(v, str):
        return Fraction(v.replace(" ", ""))
    if isinstance(v, bool):
        raise SchemaError([f"boolean {v!r} is not a number"])
    return v


@dataclass
class Scenario:
    name: str
    params: ModelParams
    t4_values: list = field(default_factory=list)
    t4_sweep: list = field(default_factory=list)
    t4_range: tuple | None = None
    commands: list = field(default_factory=list)
    output_dir: str = "out"
    description: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "params": self.params.to_dict(),
                "t4_values": [float(t) for t in self.t4_values], "t4_sweep": [float(t) for t in self.t4_sweep],
                "t4_range": None if self.t4_range is None else [float(t) for t in self.t4_range],
                "commands": list(self.commands), "output_dir": self.output_dir, "description": self.description}


def scenario_dir() -> Path:
    env = os.environ.get("GAUDIN_SCENARIO_DIR")
    if env:
        return Path(env)
    return Path(str(resources.files("gaudin_hopf") / "scenarios"))


def scenario_names() -> list[str]:
    return sorted(p.stem for p in scenario_dir().glob("*.json"))


def parse_scenario(doc, source: str = "<scenario>") -> Scenario:
    """Validate a decoded scenario document and build a :class:`Scenario`."""
    validator = jsonschema.Draft202012Validator(SCENARIO_SCHEMA)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        raise SchemaError([f"{source}: /{'/'.join(str(p) for p in e.absolute_path)}: {e.message}" for e in errors])
    params = ModelParams(**{k: _num(v) for k, v in doc["params"].items()})
    sweep = doc.get("t4_sweep", [])
    if isinstance(sweep, dict):
        a, b, n = float(_num(sweep["start"])), float(_num(sweep["stop"])), sweep["num"]
        if not (math.isfinite(a) and math.isfinite(b)) or b < a:
            raise SchemaError([f"{source}: /t4_sweep: start and stop must be finite with start <= stop"])
        sweep = [float(x) for x in np.linspace(a, b, n)]
    else:
        sweep = [_num(v) for v in sweep]
    rng = doc.get("t4_range")
    if rng is not None:
        rng = tuple(float(_num(v)) for v in rng)
        if not all(math.isfinite(v) for v in rng) or rng[1] < rng[0]:
            raise SchemaError([f"{source}: /t4_range: must be finite and ordered"])
    return Scenario(doc["name"], params, [_num(v) for v in doc.get("t4_values", [])], sweep, rng,
                    list(doc.get("commands", [])), doc.get("output_dir", "out"), doc.get("description", ""))


def load_scenario(path) -> Scenario:
    """Load a scenario from a JSON file, or a fixture by name from the scenario directory."""
    path = Path(path)
    if path.suffix != ".json" and not path.exists():
        path = scenario_dir() / f"{path.name}.json"
    if not path.exists():
        known = ", ".join(scenario_names())
        raise SchemaError([f"{path}: scenario not found (fixtures: {known})"])
    text = path.read_text(encoding="utf-8")
    if not text.strip():
        raise SchemaError([f"{path}: empty file"])
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError([f"{path}: invalid JSON: {exc}"]) from None
    return parse_scenario(doc, str(path))


# ----------------------------------------------------------------------
# argument parsing
# ----------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _t4_range(text: str):
    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise argparse.ArgumentTypeError("expected a:b or a:b:n")
    try:
        a, b = float(_num(parts[0])), float(_num(parts[1]))
        n = int(parts[2]) if len(parts) == 3 else None
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from None
    if not (math.isfinite(a) and math.isfinite(b)) or b < a or (n is not None and n < 1):
        raise argparse.ArgumentTypeError(f"bad range {text!r}: need finite a <= b and n >= 1")
    return a, b, n


def _t4_value(text: str):
    try:
        v = _num(text) if "/" in text else (int(text) if text.lstrip("-").isdigit() else float(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad t4 {text!r}") from None
    if not math.isfinite(float(v)):
        raise argparse.ArgumentTypeError("t4 must be finite")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--scenario", default="fig6", help="fixture name or path to a scenario JSON file")
    common.add_argument("--point", choices=[fp.value for fp in FixedPoint], help="rank-0 point")
    common.add_argument("--side", choices=[s.value for s in Side], default=None, help="threshold side")
    common.add_argument("--t4", type=_t4_value, help="value of t4 (overrides the scenario)")
    common.add_argument("--t4-range", type=_t4_range, help="a:b or a:b:n")
    common.add_argument("--resolution", type=int, default=512, help="occupancy grid size (cells per axis)")
    common.add_argument("--format", choices=FORMATS, default="svg", help="figure format")
    common.add_argument("--out", default=None, help="output directory for figures")
    common.add_argument("--tolerance", type=float, default=None, help="verification tolerance")
    common.add_argument("--rational", action="store_true", help="exact arithmetic where admissible")
    parser = _Parser(prog="gaudin-hopf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {
        "classify": "linear class of rank-0 points",
        "thresholds": "Hamiltonian Hopf thresholds of m0 or m2",
        "normal-form": "normal-form coefficients and criticality verdict",
        "unfold": "unfolding parameters nu1, nu2 near a threshold",
        "image": "emit one momentum-map figure",
        "events": "scan a t4 range for bifurcation events",
        "sweep": "emit figures for every t4 of the scenario sweep",
        "verify": "run a verification suite",
    }
    for name in SUBCOMMANDS:
        sp = sub.add_parser(name, parents=[common], help=helps[name])
        if name == "verify":
            from .verify import SUITES
            sp.add_argument("--suite", choices=SUITES, default="appendix")
            sp.add_argument("--draws", type=int, default=20)
            sp.add_argument("--seed", type=int, default=0)
    return parser


# ----------------------------------------------------------------------
# commands
# ----------------------------------------------------------------------

def _t4_list(args, sc: Scenario) -> list:
    if args.t4 is not None:
        return [args.t4]
    if args.t4_range is not None:
        a, b, n = args.t4_range
        return [float(x) for x in np.linspace(a, b, n or 2)]
    return list(sc.t4_values) or [sc.params.t4]


def _points(args, default=tuple(FixedPoint)) -> list[FixedPoint]:
    return [FixedPoint(args.point)] if args.point else list(default)


def _sides(args) -> list[Side]:
    return [Side(args.side)] if args.side else [Side.plus, Side.minus]


def cmd_classify(args, sc):
    out = []
    for t4 in _t4_list(args, sc):
        p = sc.params.with_t4(t4)
        for fp in _points(args):
            rec = classify(p, fp, args.tolerance or 1e-9).to_dict()
            rec.update(fixed_point=fp.value, t4=float(t4))
            out.append(rec)
    return out[0] if len(out) == 1 else out


def cmd_thresholds(args, sc):
    out = [thresholds(sc.params, fp).to_dict() for fp in _points(args, (FixedPoint.m0, FixedPoint.m2))]
    return out[0] if len(out) == 1 else out


def cmd_normal_form(args, sc):
    from . import normal_form as nf
    out = []
    for fp in _points(args, (FixedPoint.m0, FixedPoint.m2)):
        for side in _sides(args):
            pt = nf.at_threshold(sc.params, fp, side)
            exact_mode = bool(args.rational and nf._use_exact(pt if fp is FixedPoint.m0 else pt.swapped()))
            res = nf.normalize(pt, fp, side, exact_mode=exact_mode)
            rec = {"fixed_point": fp.value, "side": side.value, "t4": float(pt.t4),
                   "lie_series": res.to_dict(),
                   "criticality": nf.classify_criticality(sc.params, fp, side, tol=args.tolerance or nf.ZERO_TOL).to_dict()}
            if fp is FixedPoint.m0 and side is Side.plus:
                try:
                    raw = nf.eval_raw_coefficients(pt)
                    rec["appendix"] = {"raw": raw.to_dict(), "scaled": nf.scale(raw).to_dict(),
                                       "generating": nf.eval_generating_coefficients(pt).to_dict()}
                    rec["closed_form_a3"] = nf.a3_closed_form(pt)
                except DomainError as exc:
                    rec["appendix"] = {"error": str(exc)}
            out.append(rec)
    return out[0] if len(out) == 1 else out


def cmd_unfold(args, sc):
    out = []
    for fp in _points(args, (FixedPoint.m0, FixedPoint.m2)):
        for side in _sides(args):
            rec = unfolding(sc.params, fp, side).to_dict()
            q = sc.params if fp is FixedPoint.m0 else sc.params.swapped()
            rec["dnu2_dt4_printed"] = dnu2_printed(q)
            out.append(rec)
    return out[0] if len(out) == 1 else out


def _figure(sc: Scenario, t4, args):
    p = sc.params.with_t4(t4)
    if p.t3 == 0:
        return FigureData(p, float(t4), sample_image(p, None, args.resolution), [], [], rank0_markers(p))
    return figure_data(p, resolution=args.resolution)


def _fig_name(sc: Scenario, k: int, t4) -> str:
    return f"{sc.name}_{k:02d}_t4={float(t4):.6g}.{{ext}}"


def _emit_many(args, sc, t4s):
    out_dir = Path(args.out or sc.output_dir)
    recs = []
    for k, t4 in enumerate(t4s):
        fig = _figure(sc, t4, args)
        path = emit_figure(fig, args.format, out_dir / _fig_name(sc, k, t4).format(ext=args.format))
        recs.append({"t4": float(t4), "path": str(path), "hyperbolic_segments": fig.count(PointType.HyperbolicRegular),
                     "cusps": len(fig.cusps)})
    return recs


def cmd_image(args, sc):
    if args.resolution < 8 or args.resolution > 4096:
        raise DomainError("resolution must lie in [8, 4096]")
    t4s = _t4_list(args, sc)
    recs = _emit_many(args, sc, t4s[:1] if args.t4 is None and args.t4_range is None else t4s)
    return recs[0] if len(recs) == 1 else recs


def cmd_sweep(args, sc):
    if args.resolution < 8 or args.resolution > 4096:
        raise DomainError("resolution must lie in [8, 4096]")
    t4s = list(sc.t4_sweep) or list(sc.t4_values)
    if args.t4_range is not None:
        t4s = _t4_list(args, sc)
    if not t4s:
        raise DomainError(f"scenario {sc.name} has no t4_sweep")
    return _emit_many(args, sc, t4s)


def cmd_events(args, sc):
    if args.t4_range is not None:
        a, b, n = args.t4_range
    elif sc.t4_range is not None:
        (a, b), n = sc.t4_range, None
    else:
        raise DomainError("events needs --t4-range or a scenario t4_range")
    kw = {"seed_grid": n} if n else {}
    return [e.to_dict() for e in detect_events(sc.params, (a, b), **kw)]


def cmd_verify(args, sc):
    from .verify import run_suite
    rep = run_suite(args.suite, draws=args.draws, seed=args.seed, tolerance=args.tolerance, rational=args.rational)
    return rep.to_dict()


COMMANDS = {"classify": cmd_classify, "thresholds": cmd_thresholds, "normal-form": cmd_normal_form,
            "unfold": cmd_unfold, "image": cmd_image, "events": cmd_events, "sweep": cmd_sweep,
            "verify": cmd_verify}


def run(argv=None, stdout=None, stderr=None) -> int:
    """Execute one subcommand and return its exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        stderr.write(str(exc))
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        sc = load_scenario(args.scenario)
        result = COMMANDS[args.command](args, sc)
    except SchemaError as exc:
        for e in exc.errors:
            stderr.write(f"schema error: {e}\n")
        return EXIT_SCHEMA
    except DomainError as exc:
        stderr.write(f"domain error: {exc}\n")
        return EXIT_DOMAIN
    stdout.write(dumps(result) + "\n")
    if args.command == "verify" and not result["passed"]:
        stderr.write(f"verification failed: {', '.join(result['failed'])}\n")
        return EXIT_VERIFY
    return EXIT_OK


def main() -> None:
    sys.exit(run())


__all__ = ["Scenario", "SCENARIO_SCHEMA", "load_scenario", "parse_scenario", "scenario_dir", "scenario_names",
           "build_parser", "run", "main", "EXIT_OK", "EXIT_DOMAIN", "EXIT_VERIFY", "EXIT_USAGE", "EXIT_SCHEMA"]
