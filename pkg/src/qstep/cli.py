"""
``qstep`` command line: figure data as CSV/JSON and the validation report.

Exit status: 0 success, 1 validation failure, 2 usage error.
"""

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import validation
from .analytic import (
    ScatteringState,
    coefficients,
    match_below,
    step_limit_amplitudes,
    step_limit_coefficients,
)
from .errors import QStepError
from .model import StepPotential, kinematics, potential_value

FIG1_DELTAS = (0.5, 1.0, 2.0, 10.0)
LIMIT_DELTAS = (1.0, 2.0, 5.0, 10.0, 20.0, 50.0)
FIGURE_PRESETS = {
    2: {"delta": FIG1_DELTAS, "ratio": (1.0,)},
    3: {"delta": FIG1_DELTAS, "ratio": (2.0,)},
    4: {"delta": (0.5,), "ratio": (0.1, 0.2, 0.5, 0.9)},
    5: {"delta": (10.0,), "ratio": (0.1, 0.2, 0.5, 0.9)},
}


class UsageError(Exception):
    pass


def _float_list(text):
    try:
        values = [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _label(value):
    return format(value, "g")


def _fmt(value):
    # repr gives the shortest round-trip form of a double
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render(rows, fmt):
    if fmt == "json":
        return json.dumps(rows) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if rows:
        writer.writerow(rows[0].keys())
        for row in rows:
            writer.writerow(_fmt(v) for v in row.values())
    return buf.getvalue()


def _grid(args, lo, hi, n):
    lo = lo if args.xmin is None else args.xmin
    hi = hi if args.xmax is None else args.xmax
    n = n if args.samples is None else args.samples
    if n < 2:
        raise UsageError("--samples must be >= 2")
    if not lo < hi:
        raise UsageError("--xmin must be < --xmax")
    return np.linspace(lo, hi, n)


def cmd_potential(args):
    deltas = args.delta or FIG1_DELTAS
    pots = [StepPotential(args.v0, d) for d in deltas]
    rows = []
    for x in _grid(args, -5.0, 5.0, 401):
        row = {"x": float(x)}
        for d, p in zip(deltas, pots):
            row[f"V_delta_{_label(d)}"] = potential_value(p, float(x))
        rows.append(row)
    return rows


def _ratios(args):
    if args.energy is not None:
        return [args.energy / args.v0]
    return args.ratio


def cmd_coeffs(args):
    deltas = args.delta or FIG1_DELTAS
    ratios = _ratios(args)
    if ratios is None:
        n = 400 if args.samples is None else args.samples
        if n < 2:
            raise UsageError("--samples must be >= 2")
        ratios = [args.ratio_max * i / n for i in range(1, n + 1)]
    rows = []
    for r in ratios:
        row = {"ratio": float(r)}
        cs = [coefficients(kinematics(StepPotential(args.v0, d), r * args.v0)) for d in deltas]
        for d, c in zip(deltas, cs):
            row[f"R_delta_{_label(d)}"] = c.R
        for d, c in zip(deltas, cs):
            row[f"T_delta_{_label(d)}"] = c.T
        rows.append(row)
    return rows


def cmd_wave(args):
    if args.figure is not None:
        preset = FIGURE_PRESETS[args.figure]
        deltas, ratios = preset["delta"], preset["ratio"]
    else:
        deltas = args.delta or (1.0,)
        ratios = _ratios(args)
        if ratios is None:
            raise UsageError("wave needs --ratio, --energy or --figure")
    x = _grid(args, -5.0, 5.0, 401)
    rows = []
    for d in deltas:
        for r in ratios:
            sample = ScatteringState(StepPotential(args.v0, d), r * args.v0).sample(x)
            for i in range(len(x)):
                rows.append({
                    "delta": float(d),
                    "ratio": float(r),
                    "x": float(sample.x[i]),
                    "re_psi": float(sample.psi[i].real),
                    "im_psi": float(sample.psi[i].imag),
                    "density": float(sample.density[i]),
                    "current": float(sample.current[i]),
                })
    return rows


def cmd_limit(args):
    deltas = args.delta or LIMIT_DELTAS
    ratios = _ratios(args) or [2.0]
    if len(ratios) != 1:
        raise UsageError("limit takes a single --ratio")
    r = ratios[0]
    rows = []
    for d in deltas:
        p = StepPotential(args.v0, d)
        kin = kinematics(p, r * args.v0)
        if kin.above:
            exact, step = coefficients(kin), step_limit_coefficients(kin)
            rows.append({
                "delta": float(d),
                "R_exact": exact.R,
                "T_exact": exact.T,
                "R_step": step.R,
                "T_step": step.T,
                "deviation": abs(exact.R - step.R),
            })
        else:
            exact, step = match_below(p, r * args.v0), step_limit_amplitudes(kin)
            rows.append({
                "delta": float(d),
                "re_D": exact.D.real,
                "im_D": exact.D.imag,
                "re_D_step": step.D.real,
                "im_D_step": step.D.imag,
                "dev_D": abs(exact.D - step.D),
                "re_B": exact.B.real,
                "im_B": exact.B.imag,
                "re_B_step": step.B.real,
                "im_B_step": step.B.imag,
                "dev_B": abs(exact.B - step.B),
            })
    return rows


def cmd_validate(args):
    checks = validation.run_checks(args.perturb_gamma, args.below_only)
    width = max(len(c.name) for c in checks)
    lines = []
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        line = f"{status}  {c.name:<{width}}  error={c.error:.3e}  tol={c.tolerance:.1e}"
        if c.detail:
            line += f"  ({c.detail})"
        lines.append(line)
    ok = all(c.passed for c in checks)
    lines.append(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n", ok


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qstep",
        description="Scattering off the smooth step V(x) = (v0/2)(1 + tanh(delta x)), units hbar^2/2m = 1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, energy=True, grid=True):
        p.add_argument("--v0", type=float, default=1.0, help="barrier height (default 1)")
        p.add_argument("--delta", type=_float_list, help="deformation(s), comma separated")
        if energy:
            g = p.add_mutually_exclusive_group()
            g.add_argument("--ratio", type=_float_list, help="E/v0 value(s), comma separated")
            g.add_argument("--energy", type=float, help="energy E")
        if grid:
            p.add_argument("--xmin", type=float)
            p.add_argument("--xmax", type=float)
            p.add_argument("--samples", type=int)
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", help="output path (default stdout)")

    common(sub.add_parser("potential", help="potential profiles for several deformations"), energy=False)
    p = sub.add_parser("coeffs", help="R and T against E/v0")
    common(p, grid=False)
    p.add_argument("--samples", type=int, help="number of ratios in (0, ratio-max]")
    p.add_argument("--ratio-max", type=float, default=4.0)
    p = sub.add_parser("wave", help="wavefunction, density and current")
    common(p)
    p.add_argument("--figure", type=int, choices=sorted(FIGURE_PRESETS))
    common(sub.add_parser("limit", help="approach to the abrupt step"), grid=False)
    p = sub.add_parser("validate", help="run the cross-check suite")
    p.add_argument("--perturb-gamma", type=float, default=0.0, metavar="EPS",
                   help="shift every log-Gamma argument by EPS (fault injection)")
    p.add_argument("--below-only", action="store_true")
    p.add_argument("--output", help="output path (default stdout)")
    return parser


COMMANDS = {
    "potential": cmd_potential,
    "coeffs": cmd_coeffs,
    "wave": cmd_wave,
    "limit": cmd_limit,
}


def _emit(text, path):
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "validate":
            text, ok = cmd_validate(args)
            _emit(text, args.output)
            return 0 if ok else 1
        if args.delta is not None and any(d <= 0 for d in args.delta):
            raise UsageError("--delta values must be > 0")
        rows = COMMANDS[args.command](args)
        _emit(render(rows, args.format), args.output)
    except (UsageError, QStepError) as exc:
        print(f"qstep {args.command}: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
