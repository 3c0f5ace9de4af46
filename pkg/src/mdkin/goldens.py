"""Frozen reference solutions for the canonical test configuration.

The constants below are frozen reference values for the default
geometry at the canonical displacement configurations: the parallel
module at rho = (50, 180, pi/3) and the tip at E = (20, 20, -30).  The
checks chain full-precision values between levels and compare each stage
against the rounded reference numbers: 0.15 mm for lengths, 1e-3 rad for
angles (the references are rounded to 3, sometimes 4, decimals).

REF_DQ_IK's third column stores the rotational variable of rows 1-2 as
the angle rho3 while rows 3-4 store its half-tangent u3; check_dq_ik
accepts either encoding per row.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from . import robot
from .geometry import RobotGeometry

TOL_MM = 0.15
TOL_RAD = 1e-3

RHO_REF = (50.0, 180.0, math.pi / 3.0)
TIP_REF = (20.0, 20.0, -30.0)

# rho -> q, four branches: (q1 mm, q2 mm, q3 rad)
REF_PM_IK = (
    (-101.987, 201.987, 0.396),
    (-101.987, 201.987, 2.082),
    (201.987, -101.987, 2.082),
    (201.987, -101.987, 0.396),
)

# q -> rho from the rounded first row of REF_PM_IK: (rho1 mm, rho2 mm, rho3 rad)
REF_PM_FK_INPUT = (-101.987, 201.987, 0.396)
REF_PM_FK = (
    (50.0, 179.999, 1.047),
    (50.0, 179.999, -1.309),
    (50.0, -79.999, -1.309),
    (50.0, -79.999, 1.047),
)

# tip -> RCM, four branches: (psi rad, th rad, l_ins mm)
REF_TIP_TO_RCM = (
    (0.785, 0.81, 41.231),
    (0.785, -2.327, -41.231),
    (-2.356, -0.81, -41.231),
    (-2.356, 2.327, 41.231),
)

# platform point of the working branch (mm)
REF_PLATFORM_POINT = (-174.028, -174.028, 261.043)

# platform point -> rho, two branches
REF_PLATFORM_TO_RHO = (
    (-174.028, 289.848, 0.449),
    (-174.028, -289.848, -2.692),
)

# platform point -> RCM, four branches
REF_PLATFORM_TO_RCM = (
    (0.785, 0.81, 41.231),
    (-2.356, 2.327, 41.231),
    (-2.356, -0.81, 758.767),
    (0.785, -2.327, 758.767),
)

REF_TIP_CLOSURE = (20.0, 20.0, -30.0)

# dual quaternion level: (u1, u2, l_ins) -> (rho1, rho2, rho3-or-u3)
REF_DQ_IK_INPUT = (0.4142, 0.4316, 41.231)
REF_DQ_IK = (
    (-174.028, 289.848, 0.449),
    (-174.028, -289.848, -4.373),
)

# forward counterpart: (u1, u2, l_ins) candidates of the working rho
REF_DQ_FK = (
    (0.4142, 0.4316, 41.231),
    (-2.4142, 2.317, 41.231),
    (-2.4142, -0.4316, 758.766),
    (0.4142, -2.317, 758.766),
)


@dataclass(frozen=True)
class GoldenResult:
    name: str
    passed: bool
    max_error: float
    detail: str = ""


def _print_rounding(ref: float) -> float:
    """Half-ULP of the printed precision of a reference value."""
    text = repr(float(ref))
    decimals = len(text.split(".")[1]) if "." in text else 0
    return 0.5 * 10.0 ** (-decimals)


def _tol(ref: float, kind: float) -> float:
    """Column tolerance: the stated bound plus the reference's rounding."""
    return kind + _print_rounding(ref)


def _cmp(got, ref, tols) -> float:
    return max(abs(a - b) / _tol(b, t) for a, b, t in zip(got, ref, tols))


def _rows(name, rows, refs, tols) -> GoldenResult:
    worst = 0.0
    for got, ref in zip(rows, refs):
        worst = max(worst, _cmp(got, ref, tols))
    return GoldenResult(name, worst <= 1.0, worst,
                        f"worst error {worst:.3g} of tolerance")


def check_pm_ik(g: RobotGeometry) -> GoldenResult:
    rows = [robot.rho_to_q(RHO_REF, g, b) for b in (1, 2, 3, 4)]
    return _rows("parallel-module inverse map", rows, REF_PM_IK,
                 (TOL_MM, TOL_MM, TOL_RAD))


def check_pm_fk(g: RobotGeometry) -> GoldenResult:
    rows = [robot.q_to_rho(REF_PM_FK_INPUT, g, b) for b in (1, 2, 3, 4)]
    return _rows("parallel-module forward map", rows, REF_PM_FK,
                 (TOL_MM, TOL_MM, TOL_RAD))


def check_tip_to_rcm(g: RobotGeometry) -> GoldenResult:
    rows = [robot.tip_to_rcm(TIP_REF, g, b) for b in (1, 2, 3, 4)]
    return _rows("tip-to-RCM branches", rows, REF_TIP_TO_RCM,
                 (TOL_RAD, TOL_RAD, TOL_MM))


def check_platform_point(g: RobotGeometry) -> GoldenResult:
    rcm = robot.tip_to_rcm(TIP_REF, g, 1)
    p = robot.rcm_to_p(rcm, g)
    return _rows("platform point of the working mode", [p], [REF_PLATFORM_POINT],
                 (TOL_MM, TOL_MM, TOL_MM))


def _working_p(g: RobotGeometry):
    return robot.rcm_to_p(robot.tip_to_rcm(TIP_REF, g, 1), g)


def check_platform_to_rho(g: RobotGeometry) -> GoldenResult:
    p = _working_p(g)
    rows = [robot.p_to_rho(p, g, b) for b in (1, 2)]
    return _rows("platform-to-rho branches", rows, REF_PLATFORM_TO_RHO,
                 (TOL_MM, TOL_MM, TOL_RAD))


def check_platform_to_rcm(g: RobotGeometry) -> GoldenResult:
    p = _working_p(g)
    rows = [robot.p_to_rcm(p, g, b) for b in (1, 2, 3, 4)]
    return _rows("platform-to-RCM branches", rows, REF_PLATFORM_TO_RCM,
                 (TOL_RAD, TOL_RAD, TOL_MM))


def check_tip_closure(g: RobotGeometry) -> GoldenResult:
    rcm = robot.p_to_rcm(_working_p(g), g, 1)
    e = robot.rcm_to_e(rcm, g)
    return _rows("tip closure of the working mode", [e], [REF_TIP_CLOSURE],
                 (TOL_MM, TOL_MM, TOL_MM))


def check_dq_ik(g: RobotGeometry) -> GoldenResult:
    u1, u2, lins = REF_DQ_IK_INPUT
    worst = 0.0
    for b, ref in zip((1, 2), REF_DQ_IK):
        rho1, rho2, u3 = robot.dq_ik_displacement(u1, u2, lins, g, b)
        worst = max(worst, _cmp((rho1, rho2), ref[:2], (TOL_MM, TOL_MM)))
        # rotational column: half-tangent or the angle itself
        err = min(abs(u3 - ref[2]), abs(2.0 * math.atan(u3) - ref[2]))
        worst = max(worst, err / TOL_RAD)
    return GoldenResult("dual-quaternion-level inverse map", worst <= 1.0,
                        worst, f"worst error {worst:.3g} of tolerance")


def check_dq_fk(g: RobotGeometry) -> GoldenResult:
    p = _working_p(g)
    rows = []
    for b in (1, 2, 3, 4):
        rcm = robot.p_to_rcm(p, g, b)
        rows.append(robot.u_from_rcm(rcm))
    res = _rows("dual-quaternion-level forward candidates", rows, REF_DQ_FK,
                (TOL_RAD, TOL_RAD, TOL_MM))
    # candidate count: 4 distinct triples, each doubling as +/- quaternion
    distinct = {tuple(round(v, 6) for v in r) for r in rows}
    if len(distinct) != 4:
        return GoldenResult(res.name, False, res.max_error,
                            f"expected 4 distinct candidates, got "
                            f"{len(distinct)}")
    return res


ALL_CHECKS = (check_pm_ik, check_pm_fk, check_tip_to_rcm, check_platform_point, check_platform_to_rho,
              check_platform_to_rcm, check_tip_closure, check_dq_ik, check_dq_fk)


def run_all(g: RobotGeometry | None = None) -> tuple[list[GoldenResult],
                                                     float]:
    """All reference checks and the elapsed wall time in seconds."""
    if g is None:
        g = RobotGeometry()
    t0 = time.perf_counter()
    results = [chk(g) for chk in ALL_CHECKS]
    return results, time.perf_counter() - t0
