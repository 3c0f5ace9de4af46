"""Command line interface.

Subcommands:

* ``goldens``     -- run the frozen reference checks; nonzero exit on failure
* ``accuracy``    -- flavor-pair residual statistics (JSON)
* ``timing``      -- flavor-pair timing experiment (CSV + JSON summary)
* ``roundtrip``   -- inverse/forward closure errors (JSON)
* ``trajectory``  -- plan a rest-to-rest RCM motion and export it as CSV
* ``solve``       -- run one solver on a JSON sample

Samples are exchanged as JSON objects ``{"space": ..., "stack": [[...]x4]]}``
where the stack rows are displacement, velocity, acceleration and jerk.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import goldens, harness, solvers
from .geometry import load_geometry
from .solvers import KinematicSample, PAIRS, SOLVERS
from .trajectory import (DEFAULT_ACCEL, DEFAULT_END, DEFAULT_JERK,
                         DEFAULT_START, plan_rcm_motion)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--geometry", metavar="FILE", default=None,
                   help="geometry parameter file (key = value lines)")
    p.add_argument("--seed", type=int, default=7)


def _config(args, **kw) -> harness.ExperimentConfig:
    return harness.ExperimentConfig(seed=args.seed,
                                    geometry=load_geometry(args.geometry),
                                    **kw)


def _parse_pairs(text: str | None):
    if not text:
        return PAIRS
    keys = text.split(",")
    sel = tuple(p for p in PAIRS if p[0] in keys or p[1] in keys)
    if not sel:
        raise SystemExit(f"no solver pair matches {text!r}")
    return sel


def cmd_goldens(args) -> int:
    results, elapsed = goldens.run_all(load_geometry(args.geometry))
    ok = True
    for r in results:
        status = "ok" if r.passed else "FAIL"
        line = f"{r.name:12s} {status:4s} max error {r.max_error:.3g}"
        if r.detail:
            line += f"  ({r.detail})"
        print(line)
        ok &= r.passed
    print(f"{len(results)} checks in {elapsed * 1e3:.2f} ms")
    return 0 if ok else 1


def cmd_accuracy(args) -> int:
    cfg = _config(args, samples=args.samples, pairs=_parse_pairs(args.pairs))
    reports = harness.run_accuracy(cfg)
    if args.output:
        harness.write_reports_json(reports, args.output)
    for r in reports:
        print(f"{'+'.join(r.pair)}: disp rms={r.rms[0]:.3g} "
              f"max deriv resid={max(r.max_abs[1:]):.3g} "
              f"whiteness>={min(r.whiteness):.3f}")
    return 0


def cmd_timing(args) -> int:
    cfg = _config(args, trials=args.trials, samples=args.samples,
                  warmup=args.warmup, pairs=_parse_pairs(args.pairs))
    reports = harness.run_timing(cfg)
    harness.write_timing_csv(reports, args.output)
    if args.summary:
        harness.write_reports_json(reports, args.summary)
    for r in reports:
        a, b = r.pair
        print(f"{a} median={r.median[a]:.4g}s  {b} median={r.median[b]:.4g}s"
              f"  rank-sum p={r.p_value:.3g}")
    print(f"per-trial timings written to {args.output}")
    return 0


def cmd_roundtrip(args) -> int:
    cfg = _config(args, samples=args.samples)
    errors = harness.run_roundtrip(cfg)
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(errors, fh, indent=2)
    for key, err in errors.items():
        print(f"{key}: max closure error {err:.3g}")
    return 0


def cmd_trajectory(args) -> int:
    start = [math.radians(args.start[0]), math.radians(args.start[1]),
             args.start[2]] if args.degrees else list(args.start)
    end = [math.radians(args.end[0]), math.radians(args.end[1]),
           args.end[2]] if args.degrees else list(args.end)
    motion = plan_rcm_motion(start, end, load_geometry(args.geometry),
                             j_max=args.jerk, a_max=args.accel)
    n = motion.export_csv(args.output, args.rate)
    print(f"duration {motion.duration:.3f} s, {n} rows -> {args.output}")
    return 0


def cmd_solve(args) -> int:
    if args.input == "-":
        payload = json.load(sys.stdin)
    else:
        with open(args.input) as fh:
            payload = json.load(fh)
    sample = KinematicSample(payload["space"],
                             np.asarray(payload["stack"], dtype=float))
    out = solvers.solve(args.solver, sample, load_geometry(args.geometry),
                        branch=args.branch)
    result = {"space": out.space, "stack": out.stack.tolist()}
    text = json.dumps(result, indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mdkin",
        description="higher-order kinematics solvers and benchmarks for a "
                    "4-DOF hybrid parallel robot")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("goldens", help="run frozen reference checks")
    _add_common(p)
    p.set_defaults(fn=cmd_goldens)

    p = sub.add_parser("accuracy", help="flavor-pair residual statistics")
    _add_common(p)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--pairs", default=None,
                   help="comma-separated solver keys selecting pairs")
    p.add_argument("--output", default=None, help="JSON report path")
    p.set_defaults(fn=cmd_accuracy)

    p = sub.add_parser("timing", help="flavor-pair timing experiment")
    _add_common(p)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--warmup", type=int, default=5)
    p.add_argument("--pairs", default=None)
    p.add_argument("--output", default="timing.csv", help="per-trial CSV")
    p.add_argument("--summary", default=None, help="JSON summary path")
    p.set_defaults(fn=cmd_timing)

    p = sub.add_parser("roundtrip", help="inverse/forward closure errors")
    _add_common(p)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--output", default=None, help="JSON report path")
    p.set_defaults(fn=cmd_roundtrip)

    p = sub.add_parser("trajectory", help="plan and export an RCM motion")
    _add_common(p)
    p.add_argument("--start", type=float, nargs=3,
                   default=list(DEFAULT_START),
                   metavar=("PSI", "THETA", "LINS"))
    p.add_argument("--end", type=float, nargs=3, default=list(DEFAULT_END),
                   metavar=("PSI", "THETA", "LINS"))
    p.add_argument("--degrees", action="store_true",
                   help="interpret the two angles in degrees")
    p.add_argument("--jerk", type=float, default=DEFAULT_JERK)
    p.add_argument("--accel", type=float, default=DEFAULT_ACCEL)
    p.add_argument("--rate", type=float, default=100.0,
                   help="sampling rate of the exported CSV in Hz")
    p.add_argument("--output", default="trajectory.csv")
    p.set_defaults(fn=cmd_trajectory)

    p = sub.add_parser("solve", help="run one solver on a JSON sample")
    _add_common(p)
    p.add_argument("solver", choices=sorted(SOLVERS))
    p.add_argument("--input", default="-",
                   help="JSON sample file, or - for stdin")
    p.add_argument("--branch", type=int, default=1)
    p.add_argument("--output", default=None)
    p.set_defaults(fn=cmd_solve)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
