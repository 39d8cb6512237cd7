"""Command-line front end.

Subcommands: ``fidelity``, ``sweep``, ``contour``, ``threshold``,
``reproduce`` and ``validate``. Numbers are written with 12 significant
digits in scientific notation. Exit codes: 0 success, 1 validation
failure, 2 bad arguments, 3 numerical failure.
"""

import argparse
import sys
from pathlib import Path

import numpy as np

from . import esd, validation
from .channels import NoiseKind
from .codes import CLOSED_FORMS, StoredQubit, closed_form_fidelity, get_code
from .entanglement import NumericalError
from .esd import MetricId, SweepSpec

EXIT_OK, EXIT_VALIDATION, EXIT_ARGS, EXIT_NUMERICAL = 0, 1, 2, 3

_ANGLE_TOKENS = {"pi": np.pi, "pi/2": np.pi / 2, "pi/3": np.pi / 3, "pi/4": np.pi / 4}


class UsageError(ValueError):
    pass


def fmt(x):
    return f"{float(x):.11e}"


def parse_angle(text):
    text = text.strip().lower()
    if text in _ANGLE_TOKENS:
        return _ANGLE_TOKENS[text]
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid angle {text!r}") from None


def parse_real(text):
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number {text!r}") from None


def parse_grid(text, scalar=parse_angle):
    """``start:stop:count`` (count >= 2) or a single value."""
    parts = text.split(":")
    if len(parts) == 1:
        return np.array([scalar(parts[0])])
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"grid must be start:stop:count, got {text!r}")
    try:
        count = int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid count must be an integer in {text!r}") from None
    if count < 2:
        raise argparse.ArgumentTypeError("grid count must be at least 2")
    return np.linspace(scalar(parts[0]), scalar(parts[1]), count)


def parse_p_grid(text):
    return parse_grid(text, parse_real)


def parse_metric(text):
    try:
        return MetricId.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _code_arg(parser):
    parser.add_argument("--code", required=True, choices=["dfs4", "ns3", "dfs2", "parity2"])


def _channel_arg(parser):
    parser.add_argument("--channel", required=True, choices=[k.value for k in NoiseKind])


def _out_arg(parser):
    parser.add_argument("--out", default="-", help="output path (default: standard output)")


def _jobs_arg(parser):
    parser.add_argument("--jobs", type=int, default=None, help="worker processes (default: CPU count)")


def build_parser():
    parser = argparse.ArgumentParser(prog="esdmem", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fidelity", help="simulated and closed-form fidelity at one point")
    _code_arg(p)
    _channel_arg(p)
    p.add_argument("--a", type=parse_angle, default=0.0)
    p.add_argument("--b", type=parse_angle, default=0.0)
    p.add_argument("--p", type=parse_real, required=True)

    p = sub.add_parser("sweep", help="metric over an (a, b, p) grid as CSV")
    _code_arg(p)
    _channel_arg(p)
    p.add_argument("--metric", type=parse_metric, required=True)
    p.add_argument("--a", type=parse_grid, default=esd.DEFAULT_A_GRID)
    p.add_argument("--b", type=parse_grid, default=np.array([0.0]))
    p.add_argument("--p", type=parse_p_grid, default=esd.DEFAULT_P_GRID)
    _out_arg(p)
    _jobs_arg(p)

    p = sub.add_parser("threshold", help="sudden-death point of a metric")
    _code_arg(p)
    _channel_arg(p)
    p.add_argument("--metric", type=parse_metric, required=True)
    p.add_argument("--a", type=parse_angle, default=0.0)
    p.add_argument("--b", type=parse_angle, default=0.0)
    _out_arg(p)

    p = sub.add_parser("contour", help="threshold versus a at fixed b as CSV")
    _code_arg(p)
    _channel_arg(p)
    p.add_argument("--metric", type=parse_metric, required=True)
    p.add_argument("--b", type=parse_angle, default=0.0)
    p.add_argument("--a", type=parse_grid, default=esd.DEFAULT_A_GRID)
    _out_arg(p)
    _jobs_arg(p)

    p = sub.add_parser("reproduce", help="write the panel datasets of a figure")
    p.add_argument("--figure", type=int, required=True)
    p.add_argument("--outdir", default=".")
    p.add_argument("--a-points", type=int, default=len(esd.DEFAULT_A_GRID))
    p.add_argument("--p-points", type=int, default=len(esd.DEFAULT_P_GRID))
    _jobs_arg(p)

    p = sub.add_parser("validate", help="run the oracle and invariant suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--suite", action="append", choices=list(validation.SUITES), help="run only this suite (repeatable)"
    )
    return parser


# ---------------------------------------------------------------------------
# writers


class _Output:
    def __init__(self, path):
        self.path = path

    def __enter__(self):
        if self.path in (None, "-"):
            self.fh = sys.stdout
        else:
            self.fh = open(self.path, "w", encoding="utf-8", newline="\n")
        return self.fh

    def __exit__(self, *exc):
        if self.fh is not sys.stdout:
            self.fh.close()
        else:
            self.fh.flush()


def _csv_field(text):
    return f'"{text}"' if "," in text else text


def write_sweep(fh, table, metric):
    fh.write("a,b,p,metric,value\n")
    m = _csv_field(str(metric))
    for a, b, p, v in table:
        fh.write(f"{fmt(a)},{fmt(b)},{fmt(p)},{m},{fmt(v)}\n")


def _contour_line(a, b, res):
    p_star = fmt(res.p_star) if res.crossed else ""
    return f"{fmt(a)},{fmt(b)},{res.status.value},{p_star}"


def write_contour(fh, points, b, metric=None):
    if metric is None:
        fh.write("a,b,status,p_star\n")
        for a, res in points:
            fh.write(_contour_line(a, b, res) + "\n")
    else:
        m = _csv_field(str(metric))
        for a, res in points:
            fh.write(f"{m},{_contour_line(a, b, res)}\n")


def write_threshold(fh, res, fidelity=None):
    fh.write(f"status,{res.status.value}\n")
    if res.crossed:
        fh.write(f"p_star,{fmt(res.p_star)}\n")
        fh.write(f"bracket_width,{fmt(res.bracket_width)}\n")
        fh.write(f"metric_at_zero_check,{fmt(res.metric_at_zero_check)}\n")
        fh.write(f"multiple_crossings,{str(res.multiple_crossings).lower()}\n")
        if fidelity is not None:
            fh.write(f"fidelity,{fmt(fidelity)}\n")


# ---------------------------------------------------------------------------
# commands


def cmd_fidelity(args):
    code = get_code(args.code)
    kind = NoiseKind.parse(args.channel)
    if not 0.0 <= args.p <= 1.0:
        raise UsageError("--p must lie in [0, 1]")
    q = StoredQubit(args.a, args.b)
    sim = esd.evaluate_metric(code, kind, q, args.p, esd.preferred_fidelity_metric(code))
    if (code.name, kind) in CLOSED_FORMS:
        ref = closed_form_fidelity(code, kind, q, args.p)
        print(f"simulated={fmt(sim)} closed_form={fmt(ref)} |diff|={fmt(abs(sim - ref))}")
    else:
        print(f"simulated={fmt(sim)} closed_form=none |diff|=none")
    return EXIT_OK


def cmd_sweep(args):
    spec = SweepSpec(get_code(args.code), args.channel, args.metric, args.a, args.b, args.p)
    table = esd.sweep(spec, jobs=args.jobs)
    with _Output(args.out) as fh:
        write_sweep(fh, table, spec.metric)
    return EXIT_OK


def cmd_threshold(args):
    code = get_code(args.code)
    q = StoredQubit(args.a, args.b)
    res = esd.esd_threshold(code, args.channel, q, args.metric)
    fid = None
    if res.crossed:
        fid = esd.evaluate_metric(code, args.channel, q, res.p_star, esd.preferred_fidelity_metric(code))
    with _Output(args.out) as fh:
        write_threshold(fh, res, fid)
    return EXIT_OK


def cmd_contour(args):
    if not 0.0 <= args.b < 2 * np.pi:
        raise UsageError("--b must lie in [0, 2*pi)")
    SweepSpec(args.code, args.channel, args.metric, args.a, [args.b], [0.0])
    points = esd.zero_contour(args.code, args.channel, args.metric, args.b, args.a, jobs=args.jobs)
    with _Output(args.out) as fh:
        write_contour(fh, points, args.b)
    return EXIT_OK


def _figure_panels(figure):
    """Panel list for a figure: (file stem, kind, metric(s), b values)."""
    if figure in (1, 2):
        kind = NoiseKind.DEPHASING if figure == 1 else NoiseKind.DEPOLARIZING
        return "dfs4", kind, [
            ("neg1", "sweep", ["neg:1"], [0.0]),
            ("neg12", "sweep", ["neg:1,2"], [0.0]),
            ("concurrence", "contour", ["conc:1,2", "conc:1,3", "conc:1,4"], [np.pi / 2, np.pi / 3, 0.0]),
            ("n3", "sweep", ["n3"], [0.0, np.pi / 2]),
            ("fidelity", "sweep", ["fid"], [0.0]),
        ]
    if figure == 3:
        return "ns3", NoiseKind.DEPOLARIZING, [
            ("fidelity", "sweep", ["sfid"], [0.0]),
            ("neg3", "sweep", ["neg:3"], [0.0]),
            ("conc12", "sweep", ["conc:1,2"], [0.0]),
            ("thresholds", "contour", ["conc:1,2", "conc:1,3", "neg:3", "neg:1"], [0.0]),
        ]
    raise UsageError(f"unknown figure {figure}; choose 1, 2 or 3")


def reproduce(figure, outdir, a_points=64, p_points=256, jobs=1):
    """Write one CSV per panel of ``figure`` into ``outdir``; returns the paths."""
    code, kind, panels = _figure_panels(figure)
    if a_points < 2 or p_points < 2:
        raise UsageError("grids need at least two points")
    a_grid = np.linspace(0.0, np.pi / 2, a_points)
    p_grid = np.linspace(0.0, 1.0, p_points)
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = []
    for stem, style, metrics, b_values in panels:
        path = outdir / f"fig{figure}_{stem}.csv"
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            if style == "sweep":
                spec = SweepSpec(code, kind, metrics[0], a_grid, b_values, p_grid)
                write_sweep(fh, esd.sweep(spec, jobs=jobs), spec.metric)
            else:
                fh.write("metric,a,b,status,p_star\n")
                for metric in metrics:
                    for b in b_values:
                        points = esd.zero_contour(code, kind, metric, b, a_grid, jobs=jobs)
                        write_contour(fh, points, b, MetricId.parse(metric))
        paths.append(path)
    return paths


def cmd_reproduce(args):
    for path in reproduce(args.figure, args.outdir, args.a_points, args.p_points, args.jobs):
        print(path)
    return EXIT_OK


def cmd_validate(args):
    report = validation.run_validation(seed=args.seed, suites=args.suite)
    for name, passed, detail in report:
        print(f"{'PASS' if passed else 'FAIL'} {name}: {detail}")
    return EXIT_OK if all(p for _, p, _ in report) else EXIT_VALIDATION


COMMANDS = {
    "fidelity": cmd_fidelity,
    "sweep": cmd_sweep,
    "threshold": cmd_threshold,
    "contour": cmd_contour,
    "reproduce": cmd_reproduce,
    "validate": cmd_validate,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (NumericalError, np.linalg.LinAlgError) as exc:
        print(f"esdmem: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (ValueError, KeyError) as exc:
        print(f"esdmem: error: {exc}", file=sys.stderr)
        return EXIT_ARGS


if __name__ == "__main__":
    sys.exit(main())
