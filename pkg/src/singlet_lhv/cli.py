"""Command-line front end.

Five subcommands: params, sweep, chsh, region, verify.  Output files are
deterministic byte-for-byte for identical invocations.  Floats are printed
as their shortest round-trip decimal, booleans as true/false, CSV with LF
line endings.  Exit codes: 0 success, 1 gate or check failure, 2 usage or
infeasible input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__
from .analytic import STANDARD_CHSH_ANGLES, ChshAngles, max_visibility
from .errors import DegeneratePoint, DomainError, InfeasibleParameters, InvalidConfig
from .experiments import chsh_experiment, region_scan, sweep_gate, theta_sweep, verify_suite
from .model import ModelParams, PatternKind, solve_params

_MODEL_NAMES = {
    "sin": PatternKind.SYMMETRIZED_SINUSOIDAL,
    "line": PatternKind.SYMMETRIZED_STAIRCASE,
    "unsym": PatternKind.UNSYMMETRIZED_SINUSOIDAL,
}

SWEEP_COLUMNS = (
    "theta",
    "p_pp_mc", "p_pm_mc", "p_mp_mc", "p_mm_mc",
    "p_pp", "p_pm", "p_mp", "p_mm",
    "corr_mc", "corr", "n_pairs", "seed",
)

REGION_COLUMNS = ("eta", "v", "sin_feasible", "line_feasible", "chsh_violated", "gap")

CHSH_COLUMNS = (
    "label", "angle_1", "angle_2", "corr_mc", "se", "seed",
    "s_mc", "se_s", "s_oracle", "bound", "violated_mc",
)


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _csv_text(columns, rows) -> str:
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(_fmt(row[c]) for c in columns))
    return "\n".join(lines) + "\n"


def _jsonable(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def _json_text(command: str, seed, params: ModelParams | None, rows, extra=None) -> str:
    meta = {
        "command": command,
        "version": __version__,
        "seed": seed,
        "params": None if params is None else {"a": params.a, "b": params.b, "c": params.c},
    }
    doc = {"meta": meta, "rows": [
        {k: _jsonable(v) for k, v in row.items()} for row in rows
    ]}
    if extra:
        doc.update(extra)
    return json.dumps(doc, indent=2) + "\n"


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _solve_from_args(args) -> ModelParams:
    return solve_params(args.eta, args.vis, _MODEL_NAMES[args.model])


def _applicable_bound(eta: float, kind: PatternKind) -> float:
    if eta == 0.0:
        return 1.0
    return max_visibility(eta, kind)


def cmd_params(args) -> int:
    kind = _MODEL_NAMES[args.model]
    try:
        params = _solve_from_args(args)
    except (InfeasibleParameters, DegeneratePoint) as exc:
        print(f"eta = {_fmt(float(args.eta))}")
        print(f"v = {_fmt(float(args.vis))}")
        print(f"model = {args.model}")
        if 0.0 < args.eta <= 1.0:
            print(f"max_visibility = {_fmt(_applicable_bound(args.eta, kind))}")
        print("feasible = false")
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"eta = {_fmt(params.eta)}")
    print(f"v = {_fmt(params.v)}")
    print(f"model = {args.model}")
    print(f"a = {_fmt(params.a)}")
    print(f"b = {_fmt(params.b)}")
    print(f"c = {_fmt(params.c)}")
    print(f"max_visibility = {_fmt(_applicable_bound(params.eta, kind))}")
    print("feasible = true")
    return 0


def cmd_sweep(args) -> int:
    params = _solve_from_args(args)
    rows = theta_sweep(
        params, n_steps=args.steps, pairs_per_step=args.pairs, seed=args.seed
    )
    gate = sweep_gate(rows, params)
    dicts = [{c: getattr(row, c) for c in SWEEP_COLUMNS} for row in rows]
    if args.format == "csv":
        text = _csv_text(SWEEP_COLUMNS, dicts)
    else:
        text = _json_text("sweep", args.seed, params, dicts)
    _write(args.out, text)
    verdict = "pass" if gate.passed else "FAIL"
    print(
        f"max |corr_mc - corr| = {_fmt(gate.max_abs_deviation)} "
        f"({verdict} at 5 sigma, worst {_fmt(gate.max_sigma)})"
    )
    return 0 if gate.passed else 1


def _parse_angles(spec: str, degrees: bool) -> ChshAngles:
    parts = spec.split(",")
    if len(parts) != 4:
        raise InvalidConfig(f"--angles needs four comma-separated values, got {spec!r}")
    try:
        vals = [float(p) for p in parts]
    except ValueError as exc:
        raise InvalidConfig(f"bad angle in {spec!r}") from exc
    if degrees:
        vals = [math.radians(x) for x in vals]
    return ChshAngles(*vals)


def cmd_chsh(args) -> int:
    params = _solve_from_args(args)
    if args.angles is None:
        angles = STANDARD_CHSH_ANGLES
        if args.degrees:
            raise InvalidConfig("--degrees requires --angles")
    else:
        angles = _parse_angles(args.angles, args.degrees)
    report = chsh_experiment(
        params, angles=angles, pairs_per_setting=args.pairs, seed=args.seed
    )
    rows = [
        {
            "label": s.label,
            "angle_1": s.angle_1,
            "angle_2": s.angle_2,
            "corr_mc": s.corr_mc,
            "se": s.se,
            "seed": s.seed,
            "s_mc": report.s_mc,
            "se_s": report.se_s,
            "s_oracle": report.s_oracle,
            "bound": report.bound,
            "violated_mc": report.violated_mc,
        }
        for s in report.settings
    ]
    if args.format == "csv":
        sys.stdout.write(_csv_text(CHSH_COLUMNS, rows))
    else:
        extra = {
            "s_mc": report.s_mc,
            "se_s": report.se_s,
            "s_oracle": report.s_oracle,
            "bound": report.bound,
            "violated_mc": report.violated_mc,
        }
        sys.stdout.write(_json_text("chsh", args.seed, params, rows, extra=extra))
    return 1 if report.violated_mc else 0


def cmd_region(args) -> int:
    verdicts = region_scan(eta_steps=args.eta_steps, v_steps=args.vis_steps)
    rows = [
        {
            "eta": v.eta,
            "v": v.v,
            "sin_feasible": v.sin_feasible,
            "line_feasible": v.line_feasible,
            "chsh_violated": v.chsh_violated,
            "gap": v.gap,
        }
        for v in verdicts
    ]
    if args.format == "csv":
        text = _csv_text(REGION_COLUMNS, rows)
    else:
        text = _json_text("region", None, None, rows)
    _write(args.out, text)
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def cmd_verify(args) -> int:
    report = verify_suite(pairs_budget=args.pairs, seed=args.seed)
    width = max(len(c.name) for c in report.checks)
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        line = (
            f"{status} {c.name:<{width}} "
            f"deviation={_fmt(c.deviation)} threshold={_fmt(c.threshold)}"
        )
        if c.note:
            line += f" ({c.note})"
        print(line)
    n = len(report.checks)
    if report.passed:
        print(f"all {n} checks passed")
        return 0
    print(f"{report.n_failed} of {n} checks FAILED")
    return 1


def _add_model_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--eta", type=float, required=True, help="detector efficiency in [0, 1]")
    p.add_argument("--vis", type=float, required=True, help="visibility in [0, 1]")
    p.add_argument(
        "--model", choices=sorted(_MODEL_NAMES), default="sin",
        help="pattern kind (default: sin)",
    )


def _add_run_flags(p: argparse.ArgumentParser, pairs_default: int) -> None:
    p.add_argument("--pairs", type=int, default=pairs_default,
                   help=f"pairs per run (default: {pairs_default})")
    p.add_argument("--seed", type=int, default=42, help="master seed (default: 42)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singlet-lhv",
        description="Local hidden-variable singlet simulator and analyzer",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="solve and print pattern parameters")
    _add_model_flags(p)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("sweep", help="Monte Carlo theta sweep vs the closed form")
    _add_model_flags(p)
    p.add_argument("--steps", type=int, default=25, help="theta grid size (default: 25)")
    _add_run_flags(p, 1_000_000)
    p.add_argument("--out", required=True, help="output file path")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("chsh", help="four-setting CHSH run against 4/eta - 2")
    _add_model_flags(p)
    _add_run_flags(p, 1_000_000)
    p.add_argument("--angles", default=None,
                   help="four comma-separated settings a,b,c,d (default: 0,pi/2,pi/4,3pi/4)")
    p.add_argument("--degrees", action="store_true",
                   help="interpret --angles in degrees instead of radians")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_chsh)

    p = sub.add_parser("region", help="classify an (eta, v) grid")
    p.add_argument("--eta-steps", type=int, required=True, help="efficiency grid size")
    p.add_argument("--vis-steps", type=int, required=True, help="visibility grid size")
    p.add_argument("--out", required=True, help="output file path")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("verify", help="run the full verification suite")
    _add_run_flags(p, 1_000_000)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InfeasibleParameters, DegeneratePoint, DomainError, InvalidConfig) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
