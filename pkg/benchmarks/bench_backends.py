"""Compare the compiled and pure-Python jet arithmetic backends.

Times the low-level kernels both backends share, then a full solver
pass with each backend active.  The compiled backend is selected at
import time unless MDKIN_PURE=1 is set, so the solver comparison runs
in subprocesses.

Usage: python3 benchmarks/bench_backends.py [--reps N] [--samples N]
"""

from __future__ import annotations

import argparse
import json
import math
import os
import statistics
import subprocess
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from mdkin import _jet_pure  # noqa: E402

try:
    from mdkin import _jet_cy
except ImportError:
    _jet_cy = None

X = (0.7, 1.3, -0.4, 0.05)
Y = (1.1, -0.2, 0.8, 0.3)

KERNELS = (
    ("mul", lambda m: m.mul(X, Y)),
    ("div", lambda m: m.div(X, Y)),
    ("sin", lambda m: m.sin(X)),
    ("sqrt", lambda m: m.sqrt(Y)),
    ("atan2", lambda m: m.atan2(X, Y)),
)

_SOLVER_SNIPPET = """
import json, time, statistics
from mdkin import BACKEND, RobotGeometry, solve, plan_rcm_motion
motion = plan_rcm_motion()
g = RobotGeometry()
ts = [motion.duration * i / {samples} for i in range({samples})]
samples = [motion.tip_sample(t) for t in ts]
for s in samples[:20]:
    solve("alg4", s, g)
runs = []
for _ in range({reps}):
    t0 = time.perf_counter()
    for s in samples:
        solve("alg4", s, g)
    runs.append(time.perf_counter() - t0)
print(json.dumps({{"backend": BACKEND, "median_s": statistics.median(runs)}}))
"""


def time_kernel(fn, module, reps: int) -> float:
    best = math.inf
    for _ in range(5):
        t0 = time.perf_counter()
        for _ in range(reps):
            fn(module)
        best = min(best, time.perf_counter() - t0)
    return best / reps


def bench_solver(pure: bool, reps: int, samples: int) -> dict:
    env = dict(os.environ)
    env.pop("MDKIN_PURE", None)
    if pure:
        env["MDKIN_PURE"] = "1"
    code = _SOLVER_SNIPPET.format(reps=reps, samples=samples)
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--reps", type=int, default=20000,
                    help="kernel repetitions per timing run")
    ap.add_argument("--samples", type=int, default=200,
                    help="trajectory samples for the solver comparison")
    args = ap.parse_args()

    if _jet_cy is None:
        print("compiled backend unavailable; kernel comparison skipped")
    else:
        print(f"{'kernel':8s} {'pure (ns)':>10s} {'compiled (ns)':>14s} "
              f"{'speedup':>8s}")
        for name, fn in KERNELS:
            tp = time_kernel(fn, _jet_pure, args.reps) * 1e9
            tc = time_kernel(fn, _jet_cy, args.reps) * 1e9
            print(f"{name:8s} {tp:10.1f} {tc:14.1f} {tp / tc:7.2f}x")

    print()
    solver_reps = 5
    for pure in (True, False):
        r = bench_solver(pure, solver_reps, args.samples)
        print(f"alg4 over {args.samples} samples, backend={r['backend']}: "
              f"median {r['median_s'] * 1e3:.2f} ms")
    return 0


if __name__ == "__main__":
    sys.exit(main())
