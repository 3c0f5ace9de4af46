"""Jerk-limited point-to-point motion planning.

Each planned coordinate follows a rest-to-rest S-curve with bounded jerk
and acceleration: jerk is piecewise constant (+j, 0, -j, -j, 0, +j),
acceleration a symmetric trapezoid (or triangle for short moves).  A
multi-axis motion is planned per coordinate in RCM space
(psi, th, l_ins), synchronized to the slowest axis by time stretching
(which only lowers jerk and acceleration), then mapped to the tip point
through the kinematics, so the full derivative stack of the tip motion
is available at any time.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from . import robot
from .geometry import RobotGeometry
from .multidual import MultiDual
from .solvers import KinematicSample, stack_from_jets

#: Default clinical insertion motion in RCM coordinates (rad, rad, mm).
DEFAULT_START = (math.radians(1.40), math.radians(40.44), 7.73)
DEFAULT_END = (math.radians(10.0), math.radians(33.0), 100.0)
DEFAULT_JERK = 2.0
DEFAULT_ACCEL = 4.0


class JerkLimitedProfile:
    """Rest-to-rest scalar S-curve from x0 to x1 with |jerk| <= j_max and
    |accel| <= a_max.  Zero-length moves yield a zero-duration profile."""

    def __init__(self, x0: float, x1: float, j_max: float = DEFAULT_JERK,
                 a_max: float = DEFAULT_ACCEL):
        if j_max <= 0.0 or a_max <= 0.0:
            raise ValueError("jerk and acceleration limits must be positive")
        self.x0 = float(x0)
        self.x1 = float(x1)
        self.j_max = float(j_max)
        self.a_max = float(a_max)
        dist = abs(self.x1 - self.x0)
        sign = 1.0 if self.x1 >= self.x0 else -1.0
        if dist == 0.0:
            self._segments = []
        else:
            tj = a_max / j_max
            if dist >= 2.0 * a_max * tj * tj:
                ta = 0.5 * (math.sqrt(tj * tj + 4.0 * dist / a_max)
                            - 3.0 * tj)
            else:
                tj = (dist / (2.0 * j_max)) ** (1.0 / 3.0)
                ta = 0.0
            j = sign * j_max
            self._segments = [(tj, j), (ta, 0.0), (tj, -j),
                              (tj, -j), (ta, 0.0), (tj, j)]
        self._rebuild()

    def _rebuild(self):
        """Integrate segment boundary states (position, velocity, accel)."""
        self._knots = [(0.0, self.x0, 0.0, 0.0)]
        t, x, v, a = 0.0, self.x0, 0.0, 0.0
        for dt, j in self._segments:
            x += v * dt + 0.5 * a * dt * dt + j * dt ** 3 / 6.0
            v += a * dt + 0.5 * j * dt * dt
            a += j * dt
            t += dt
            self._knots.append((t, x, v, a))
        self.duration = t

    def stretch_to(self, duration: float) -> "JerkLimitedProfile":
        """Rescale in time to the given (longer) duration, in place."""
        if not self._segments or duration == self.duration:
            return self
        if duration < self.duration:
            raise ValueError("cannot compress a profile below its duration")
        k = duration / self.duration
        self._segments = [(dt * k, j / k ** 3) for dt, j in self._segments]
        self._rebuild()
        return self

    def evaluate(self, t: float) -> tuple[float, float, float, float]:
        """(position, velocity, acceleration, jerk) at time t; the profile
        is at rest outside [0, duration]."""
        if t <= 0.0:
            return (self.x0, 0.0, 0.0, 0.0)
        if t >= self.duration or not self._segments:
            return (self.x1, 0.0, 0.0, 0.0)
        i = 0
        for i, (dt, _) in enumerate(self._segments):
            t0 = self._knots[i][0]
            if t < t0 + dt:
                break
        t0, x, v, a = self._knots[i]
        j = self._segments[i][1]
        s = t - t0
        return (x + v * s + 0.5 * a * s * s + j * s ** 3 / 6.0,
                v + a * s + 0.5 * j * s * s,
                a + j * s,
                j)


@dataclass(frozen=True)
class PlannedMotion:
    """Synchronized multi-axis S-curve motion in RCM coordinates."""

    profiles: tuple[JerkLimitedProfile, ...]
    geometry: RobotGeometry

    @property
    def duration(self) -> float:
        return max((p.duration for p in self.profiles), default=0.0)

    def rcm_stack(self, t: float) -> np.ndarray:
        """(4, 3) stack of the planned RCM coordinates at time t."""
        cols = [p.evaluate(t) for p in self.profiles]
        return np.array(cols, dtype=float).T

    def rcm_jets(self, t: float) -> tuple:
        st = self.rcm_stack(t)
        return tuple(
            MultiDual((st[0, i], st[1, i], 0.5 * st[2, i], st[3, i] / 6.0))
            for i in range(3))

    def tip_sample(self, t: float) -> KinematicSample:
        """Tip position sample with full derivative stack at time t."""
        e_jets = robot.rcm_to_e(self.rcm_jets(t), self.geometry)
        return KinematicSample("tip", stack_from_jets(e_jets))

    def rho_sample(self, t: float, branch: int = 1) -> KinematicSample:
        p_jets = robot.rcm_to_p(self.rcm_jets(t), self.geometry)
        rho_jets = robot.p_to_rho(p_jets, self.geometry, branch)
        return KinematicSample("rho", stack_from_jets(rho_jets))

    def dq_sample(self, t: float) -> KinematicSample:
        u1, u2, lins = robot.u_from_rcm(self.rcm_jets(t))
        qe = robot.dq_tip(u1, u2, lins, self.geometry)
        stack = np.array([[c.derivative(k) for c in qe.components()]
                          for k in range(4)])
        return KinematicSample("dq", stack)

    def export_csv(self, path, rate_hz: float = 100.0) -> int:
        """Sample the tip motion at rate_hz and write it as CSV.

        Columns: t, then position/velocity/acceleration/jerk of the tip
        (x, y, z each).  Returns the number of rows written.
        """
        if rate_hz <= 0.0:
            raise ValueError("sampling rate must be positive")
        n = int(math.floor(self.duration * rate_hz)) + 1
        times = [i / rate_hz for i in range(n)]
        if times[-1] < self.duration:
            times.append(self.duration)
        header = ["t"]
        for kind in ("pos", "vel", "acc", "jerk"):
            header += [f"{kind}_{ax}" for ax in "xyz"]
        with open(path, "w", newline="") as fh:
            wr = csv.writer(fh)
            wr.writerow(header)
            for t in times:
                st = self.tip_sample(t).stack
                wr.writerow([f"{t:.6f}"] + [repr(float(v)) for v in st.flat])
        return len(times)


def plan_rcm_motion(start: Sequence[float] = DEFAULT_START,
                    end: Sequence[float] = DEFAULT_END,
                    geometry: RobotGeometry | None = None,
                    j_max: float = DEFAULT_JERK,
                    a_max: float = DEFAULT_ACCEL) -> PlannedMotion:
    """Plan a synchronized rest-to-rest motion between two RCM poses."""
    if geometry is None:
        geometry = RobotGeometry()
    profiles = [JerkLimitedProfile(a, b, j_max, a_max)
                for a, b in zip(start, end, strict=True)]
    t_sync = max((p.duration for p in profiles), default=0.0)
    for p in profiles:
        p.stretch_to(t_sync)
    return PlannedMotion(tuple(profiles), geometry)
