"""Statistical benchmark harness for the solver pairs.

Each flavor pair (classical vs multidual) is fed the same deterministic
input samples drawn from planned motions:

* task-space pairs (alg3/alg4, alg5/alg6) and the dual quaternion pair
  (alg7/alg8) sample the default clinical tip motion;
* the joint-level pair (alg1/alg2) samples a smooth periodic motion
  inside the parallel-module workspace, since the clinical tip motion
  maps outside the module's reach.

run_accuracy compares the two outputs sample by sample: the displacement
residual must be identically zero (shared scalar path), derivative
residuals are summarized by RMS and their sample series tested for
whiteness via lag autocorrelation.  run_timing measures wall time per
trial and compares the two distributions with a rank-sum test.
run_roundtrip closes every solver with its forward counterpart.
"""

from __future__ import annotations

import csv
import json
import math
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

import numpy as np
from scipy.stats import ranksums

from . import solvers
from .geometry import RobotGeometry
from .multidual import MultiDual, sin as md_sin
from .solvers import KinematicSample, PAIRS, SOLVERS, stack_from_jets
from .trajectory import plan_rcm_motion

MAX_LAG = 20

#: Amplitudes/frequencies of the joint-level benchmark motion (in-reach).
_RHO_MOTION = ((50.0, 0.6, 0.0), (15.0, 0.8, 0.3), (0.25, 0.5, 1.0))
_RHO_CENTER = (0.0, 180.0, math.pi / 3.0)
_RHO_SPAN = 10.0  # seconds of the periodic motion that get sampled


@dataclass(frozen=True)
class ExperimentConfig:
    trials: int = 1000
    samples: int = 1000
    warmup: int = 5
    seed: int = 7
    pairs: tuple[tuple[str, str], ...] = PAIRS
    branch: int = 1
    geometry: RobotGeometry = field(default_factory=RobotGeometry)

    def __post_init__(self):
        if self.trials < 1 or self.samples < 1 or self.warmup < 0:
            raise ValueError("trials/samples must be >= 1, warmup >= 0")
        for pair in self.pairs:
            if tuple(pair) not in PAIRS:
                raise ValueError(f"unknown solver pair {pair!r}")


def _rho_sample_at(t: float) -> KinematicSample:
    tj = MultiDual.variable(t)
    jets = tuple(c + a * md_sin(w * tj + p)
                 for c, (a, w, p) in zip(_RHO_CENTER, _RHO_MOTION))
    return KinematicSample("rho", stack_from_jets(jets))


def make_inputs(pair: Sequence[str], n: int, seed: int,
                geometry: RobotGeometry) -> list[KinematicSample]:
    """Deterministic input samples for one solver pair.

    Sample instants are drawn independently, not time-ordered, so that
    any structure in the residual series reflects the solvers rather
    than adjacency of the inputs.
    """
    rng = np.random.default_rng(seed)
    space = SOLVERS[pair[0]][0].input_space
    if space == "rho":
        times = rng.uniform(0.0, _RHO_SPAN, n)
        return [_rho_sample_at(t) for t in times]
    motion = plan_rcm_motion(geometry=geometry)
    times = rng.uniform(0.0, motion.duration, n)
    if space == "tip":
        return [motion.tip_sample(t) for t in times]
    if space == "dq":
        return [motion.dq_sample(t) for t in times]
    raise ValueError(f"no input generator for space {space!r}")


# ---------------------------------------------------------------------------
# accuracy
# ---------------------------------------------------------------------------

def _autocorr_in_band(series: np.ndarray, max_lag: int = MAX_LAG) -> int:
    """Number of lag autocorrelations (1..max_lag) inside the band.

    A constant series (typically all-zero residuals) has no correlation
    structure and counts as fully in band.
    """
    n = len(series)
    x = series - series.mean()
    var = float(x @ x)
    if var == 0.0:
        return max_lag
    band = 2.0 / math.sqrt(n)
    inside = 0
    for lag in range(1, max_lag + 1):
        r = float(x[:-lag] @ x[lag:]) / var
        inside += abs(r) <= band
    return inside


@dataclass(frozen=True)
class ResidualReport:
    pair: tuple[str, str]
    n_samples: int
    rms: tuple[float, float, float, float]  # per derivative order
    max_abs: tuple[float, float, float, float]
    whiteness: tuple[float, float, float, float]  # in-band fraction
    band: float

    def to_dict(self) -> dict:
        return {
            "pair": list(self.pair),
            "n_samples": self.n_samples,
            "rms": list(self.rms),
            "max_abs": list(self.max_abs),
            "whiteness": list(self.whiteness),
            "band": self.band,
        }


def run_accuracy(cfg: ExperimentConfig,
                 override: dict[str, Callable] | None = None
                 ) -> list[ResidualReport]:
    """Residual statistics between the flavors of each configured pair.

    override maps a solver key to a replacement callable with the same
    signature; it exists so tests can inject a deliberately broken
    solver and watch the harness flag it.
    """
    override = override or {}
    reports = []
    for pair in cfg.pairs:
        inputs = make_inputs(pair, cfg.samples, cfg.seed, cfg.geometry)
        fns = [override.get(k, SOLVERS[k][1]) for k in pair]
        res = np.empty((cfg.samples, 4, 3))
        for i, samp in enumerate(inputs):
            a = fns[0](samp, cfg.geometry, cfg.branch)
            b = fns[1](samp, cfg.geometry, cfg.branch)
            res[i] = a.stack - b.stack
        rms = tuple(float(np.sqrt(np.mean(res[:, k, :] ** 2)))
                    for k in range(4))
        mx = tuple(float(np.abs(res[:, k, :]).max()) for k in range(4))
        # pool the lag counts of the components so the fraction stays an
        # exact ratio of integers
        white = tuple(
            sum(_autocorr_in_band(res[:, k, c]) for c in range(3))
            / (3 * MAX_LAG) for k in range(4))
        reports.append(ResidualReport(tuple(pair), cfg.samples, rms, mx,
                                      white, 2.0 / math.sqrt(cfg.samples)))
    return reports


# ---------------------------------------------------------------------------
# timing
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TimingReport:
    pair: tuple[str, str]
    trials: int
    samples: int
    seconds: dict  # solver key -> list of per-trial wall seconds
    median: dict
    iqr: dict
    p_value: float  # rank-sum test between the two timing series

    def to_dict(self) -> dict:
        return {
            "pair": list(self.pair),
            "trials": self.trials,
            "samples": self.samples,
            "median": self.median,
            "iqr": self.iqr,
            "p_value": self.p_value,
        }


def run_timing(cfg: ExperimentConfig) -> list[TimingReport]:
    """Wall-time distributions per solver; warm-up trials are discarded."""
    reports = []
    for pair in cfg.pairs:
        inputs = make_inputs(pair, cfg.samples, cfg.seed, cfg.geometry)
        seconds: dict[str, list[float]] = {k: [] for k in pair}
        for key in pair:
            fn = SOLVERS[key][1]
            for trial in range(cfg.warmup + cfg.trials):
                t0 = time.perf_counter()
                for samp in inputs:
                    fn(samp, cfg.geometry, cfg.branch)
                dt = time.perf_counter() - t0
                if trial >= cfg.warmup:
                    seconds[key].append(dt)
        med = {k: float(np.median(v)) for k, v in seconds.items()}
        iqr = {k: float(np.percentile(v, 75) - np.percentile(v, 25))
               for k, v in seconds.items()}
        if cfg.trials >= 2:
            p = float(ranksums(seconds[pair[0]], seconds[pair[1]]).pvalue)
        else:
            p = float("nan")
        reports.append(TimingReport(tuple(pair), cfg.trials, cfg.samples,
                                    seconds, med, iqr, p))
    return reports


def write_timing_csv(reports: Sequence[TimingReport], path) -> None:
    """Per-trial timing series as CSV: pair, solver, trial, seconds."""
    with open(path, "w", newline="") as fh:
        wr = csv.writer(fh)
        wr.writerow(["pair", "solver", "trial", "seconds"])
        for rep in reports:
            tag = "+".join(rep.pair)
            for key, series in rep.seconds.items():
                for i, s in enumerate(series):
                    wr.writerow([tag, key, i, repr(s)])


def write_reports_json(reports, path) -> None:
    Path(path).write_text(
        json.dumps([r.to_dict() for r in reports], indent=2) + "\n")


# ---------------------------------------------------------------------------
# round trips
# ---------------------------------------------------------------------------

_ROUNDTRIPS = tuple((f"alg{i}", f"fk{i}") for i in range(1, 9))


def run_roundtrip(cfg: ExperimentConfig) -> dict[str, float]:
    """Max |forward(inverse(x)) - x| per solver over its input motion."""
    out = {}
    for ik, fk in _ROUNDTRIPS:
        inputs = make_inputs((ik, ik), cfg.samples, cfg.seed, cfg.geometry)
        worst = 0.0
        for samp in inputs:
            mid = SOLVERS[ik][1](samp, cfg.geometry, cfg.branch)
            back = SOLVERS[fk][1](mid, cfg.geometry, cfg.branch)
            worst = max(worst, float(np.abs(back.stack - samp.stack).max()))
        out[ik] = worst
    return out
