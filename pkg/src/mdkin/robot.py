"""Closed-form displacement kinematics of the 4-DOF hybrid parallel robot.

The mechanism stacks four levels:

  q   = (q1, q2, q3)        active joint coordinates
  rho = (rho1, rho2, rho3)  intermediate parallel-module coordinates
  P                         guided platform point (Cartesian, mm)
  RCM = (psi, th, l_ins)    remote-center-of-motion angles and insertion
  E                         instrument tip (Cartesian, mm)

Every map below is closed form and branch-indexed: the inverse maps
enumerate all assembly/working modes, branch 1 being the working mode
used by the solvers.  All functions accept float or MultiDual scalars,
and the float path of each formula is exactly the scalar specialization
of the jet path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _levels_gen as gen
from .geometry import RobotGeometry
from .multidual import MultiDual, sin, cos, tan, sqrt, atan2, asin
from .quat import DualQuaternion, Quaternion

_TWO_PI = 2.0 * math.pi

LEVELS = ("rho_q", "p_rho", "rcm_p", "rcm_e", "dq")


class WorkspaceError(ValueError):
    """The requested configuration is outside the reachable workspace."""


def _re(x) -> float:
    return x.real if isinstance(x, MultiDual) else float(x)


def _wrap_pi(x):
    """Shift by a multiple of 2*pi so the real part lands in (-pi, pi]."""
    k = math.floor((math.pi - _re(x)) / _TWO_PI)
    return x + _TWO_PI * k if k else x


def _geom_tuple(g: RobotGeometry) -> tuple:
    return (g.l, g.l0, g.l1, g.l2, g.l3, g.l4)


def _check_branch(branch: int, count: int) -> None:
    if not 1 <= branch <= count:
        raise ValueError(f"branch must be in 1..{count}, got {branch}")


# ---------------------------------------------------------------------------
# level rho <-> q (parallel module)
# ---------------------------------------------------------------------------

def rho_to_q(rho, g: RobotGeometry, branch: int = 1):
    """Inverse map of the parallel module; four branches."""
    _check_branch(branch, 4)
    rho1, rho2, rho3 = rho
    disc = g.l1 * g.l1 - (rho2 - g.l4) * (rho2 - g.l4)
    if _re(disc) <= 0.0:
        raise WorkspaceError("rho2 out of reach for the prismatic pair")
    w = sqrt(disc)
    if _re(g.l3 * g.l3 - w * w) <= 0.0:
        raise WorkspaceError("rho2 out of reach for the coupler link")
    if branch in (1, 2):
        q1, q2 = rho1 - w, rho1 + w
    else:
        q1, q2 = rho1 + w, rho1 - w
    # equalize the coupler loop: a*sin(q3) + b*cos(q3) = (a*a + b*b)/(2*l2)
    l1p = sqrt(g.l1 * g.l1 - w * w)
    l3p = sqrt(g.l3 * g.l3 - w * w)
    a = l3p + l1p * sin(rho3)
    b = l1p * cos(rho3)
    r2 = a * a + b * b
    ratio = r2 / (2.0 * g.l2) / sqrt(r2)
    if not -1.0 < _re(ratio) < 1.0:
        raise WorkspaceError("coupler loop cannot close at this rho")
    phi = atan2(b, a)
    if branch in (1, 4):
        q3 = asin(ratio) - phi
    else:
        q3 = math.pi - asin(ratio) - phi
    return (q1, q2, _wrap_pi(q3))


def q_to_rho(q, g: RobotGeometry, branch: int = 1):
    """Forward map of the parallel module; four branches."""
    _check_branch(branch, 4)
    q1, q2, q3 = q
    w = (q2 - q1) / 2.0
    d1 = g.l1 * g.l1 - w * w
    d3 = g.l3 * g.l3 - w * w
    if _re(d1) <= 0.0 or _re(d3) <= 0.0:
        raise WorkspaceError("joint separation exceeds link lengths")
    l1p = sqrt(d1)
    l3p = sqrt(d3)
    rho1 = (q1 + q2) / 2.0
    rho2 = g.l4 + l1p if branch in (1, 2) else g.l4 - l1p
    a = l3p - g.l2 * sin(q3)
    c2 = g.l2 * cos(q3)
    rhs = -(a * a + c2 * c2 + l1p * l1p - g.l2 * g.l2) / (2.0 * l1p)
    r = sqrt(a * a + c2 * c2)
    ratio = rhs / r
    if not -1.0 < _re(ratio) < 1.0:
        raise WorkspaceError("coupler loop cannot close at this q")
    phi = atan2(c2, a)
    if branch in (1, 4):
        rho3 = phi + asin(ratio)
    else:
        rho3 = phi + math.pi - asin(ratio)
    return (rho1, rho2, _wrap_pi(rho3))


# ---------------------------------------------------------------------------
# level P <-> rho
# ---------------------------------------------------------------------------

def rho_to_p(rho, g: RobotGeometry):
    rho1, rho2, rho3 = rho
    return (rho2 * sin(rho3) - g.l0, rho1, rho2 * cos(rho3))


def p_to_rho(p, g: RobotGeometry, branch: int = 1):
    """Two branches: (rho2, rho3) and (-rho2, rho3 - pi)."""
    _check_branch(branch, 2)
    xp, yp, zp = p
    xs = xp + g.l0
    r = sqrt(xs * xs + zp * zp)
    ang = atan2(xs, zp)
    if branch == 1:
        return (yp, r, ang)
    return (yp, -r, _wrap_pi(ang - math.pi))


# ---------------------------------------------------------------------------
# RCM levels
# ---------------------------------------------------------------------------

def _rcm_candidates(v):
    """The four (psi, th, d) with v = d*(cos psi cos th, sin psi cos th, -sin th)."""
    x, y, z = v
    d = sqrt(x * x + y * y + z * z)
    hyp = sqrt(x * x + y * y)
    psi = atan2(y, x)
    th = atan2(-z, hyp)
    return (
        (psi, th, d),
        (psi, _wrap_pi(th - math.pi), -d),
        (_wrap_pi(psi - math.pi), -th, -d),
        (_wrap_pi(psi - math.pi), _wrap_pi(math.pi - th), d),
    )


def rcm_to_e(rcm, g: RobotGeometry):
    psi, th, lins = rcm
    return (lins * cos(psi) * cos(th), lins * sin(psi) * cos(th),
            -lins * sin(th))


def tip_to_rcm(e, g: RobotGeometry, branch: int = 1):
    """RCM coordinates of a tip position; four branches."""
    _check_branch(branch, 4)
    if _re(e[0]) == 0.0 and _re(e[1]) == 0.0:
        raise WorkspaceError("tip on the RCM axis: psi is indeterminate")
    return _rcm_candidates(e)[branch - 1]


def rcm_to_p(rcm, g: RobotGeometry):
    psi, th, lins = rcm
    d = lins - g.l
    return (d * cos(psi) * cos(th), d * sin(psi) * cos(th), -d * sin(th))


def p_to_rcm(p, g: RobotGeometry, branch: int = 1):
    """RCM coordinates of a platform point; four branches.

    Branch 1 is the working mode with l_ins < l.
    """
    _check_branch(branch, 4)
    if _re(p[0]) == 0.0 and _re(p[1]) == 0.0:
        raise WorkspaceError("platform point on the RCM axis")
    cands = _rcm_candidates(p)
    psi, th, d = cands[(2, 1, 0, 3)[branch - 1]]
    return (psi, th, g.l + d)


# ---------------------------------------------------------------------------
# dual quaternion level (half-tangent coordinates u1, u2, u3)
# ---------------------------------------------------------------------------

def dq_ik_displacement(u1, u2, lins, g: RobotGeometry, branch: int = 1):
    """(rho1, rho2, u3) solving the platform loop; two branches.

    u1 = tan(psi/2), u2 = tan(th/2) and u3 = tan(rho3/2) are the
    half-tangent coordinates of the rotational variables.
    """
    _check_branch(branch, 2)
    d = lins - g.l
    n1 = 1.0 + u1 * u1
    n2 = 1.0 + u2 * u2
    c1, s1 = (1.0 - u1 * u1) / n1, (2.0 * u1) / n1
    c2, s2 = (1.0 - u2 * u2) / n2, (2.0 * u2) / n2
    xp = d * c1 * c2
    rho1 = d * s1 * c2
    zp = -d * s2
    xs = xp + g.l0
    r = sqrt(xs * xs + zp * zp)
    if branch == 1:
        rho2 = r
    else:
        rho2 = -r
    den = rho2 + zp
    if _re(den) == 0.0:
        raise WorkspaceError("half-tangent u3 has a pole at this pose")
    return (rho1, rho2, xs / den)


def u_from_rcm(rcm):
    """Half-tangent coordinates (u1, u2, l_ins) of RCM coordinates."""
    psi, th, lins = rcm
    return (tan(psi / 2.0), tan(th / 2.0), lins)


def dq_platform(u1, u2, lins, g: RobotGeometry) -> DualQuaternion:
    """Unit dual quaternion of the platform point frame at P."""
    return _dq_along_axis(u1, u2, lins - g.l)


def dq_tip(u1, u2, lins, g: RobotGeometry) -> DualQuaternion:
    """Unit dual quaternion of the instrument tip frame at E."""
    return _dq_along_axis(u1, u2, lins)


def dq_instrument(g: RobotGeometry) -> DualQuaternion:
    """Constant dual quaternion from the P frame to the tip frame."""
    return DualQuaternion.from_translation((g.l, 0.0, 0.0))


def _dq_along_axis(u1, u2, d) -> DualQuaternion:
    """Frame rotated by Rz(psi) Ry(th), translated d along its x axis."""
    n1 = 1.0 + u1 * u1
    n2 = 1.0 + u2 * u2
    h = 1.0 / (2.0 * sqrt(n1 * n2))
    x = Quaternion(2.0 * h, -2.0 * u1 * u2 * h, 2.0 * u2 * h, 2.0 * u1 * h)
    y = Quaternion(d * u1 * u2 * h, d * h, d * u1 * h, -(d * u2 * h))
    return DualQuaternion(x, y)


def dq_joint_space(rho1, rho2, u3, u1, u2, g: RobotGeometry) -> DualQuaternion:
    """Platform dual quaternion rebuilt from joint-space variables.

    Same rotation as dq_platform but with the translation expressed
    through (rho1, rho2, u3); equal to dq_platform when the loop closes.
    """
    n3 = 1.0 + u3 * u3
    px = rho2 * (2.0 * u3) / n3 - g.l0
    py = rho1
    pz = rho2 * (1.0 - u3 * u3) / n3
    n1 = 1.0 + u1 * u1
    n2 = 1.0 + u2 * u2
    h = 1.0 / (2.0 * sqrt(n1 * n2))
    x = Quaternion(2.0 * h, -2.0 * u1 * u2 * h, 2.0 * u2 * h, 2.0 * u1 * h)
    y = Quaternion.from_vector((px, py, pz)).scale(0.5) * x
    return DualQuaternion(x, y)


def dq_parameterizations(rcm, g: RobotGeometry) -> dict:
    """The four coupled dual quaternion parameterizations at an RCM pose.

    Returns {"platform", "tip", "instrument", "joint_space"}; the loop
    identities platform == tip * conj(instrument) and
    platform == joint_space hold for every reachable pose.
    """
    u1, u2, lins = u_from_rcm(rcm)
    p = rcm_to_p(rcm, g)
    rho1, rho2, rho3 = p_to_rho(p, g, branch=1)
    u3 = tan(rho3 / 2.0)
    return {
        "platform": dq_platform(u1, u2, lins, g),
        "tip": dq_tip(u1, u2, lins, g),
        "instrument": dq_instrument(g),
        "joint_space": dq_joint_space(rho1, rho2, u3, u1, u2, g),
    }


# ---------------------------------------------------------------------------
# constraint Jacobian diagnostics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LevelJacobians:
    """A = dF/d(input), B = dF/d(output), J = -inv(B) A and diagnostics."""

    level: str
    a: np.ndarray
    b: np.ndarray
    j: np.ndarray | None
    det_a: float
    det_b: float
    serial_singular: bool  # det B ~ 0: output rates unsolvable
    parallel_singular: bool  # det A ~ 0: input rates in the null space


def jacobians(level: str, state, g: RobotGeometry,
              tol: float = 1e-12) -> LevelJacobians:
    """Constraint Jacobians of one level at a combined (input, output) state."""
    if level not in LEVELS:
        raise ValueError(f"unknown level {level!r}; expected one of {LEVELS}")
    gt = _geom_tuple(g)
    a = np.array(getattr(gen, f"{level}_A")(tuple(state), gt), dtype=float)
    b = np.array(getattr(gen, f"{level}_B")(tuple(state), gt), dtype=float)
    det_a = float(np.linalg.det(a))
    det_b = float(np.linalg.det(b))
    scale_a = max(1.0, float(np.abs(a).max()) ** 3)
    scale_b = max(1.0, float(np.abs(b).max()) ** 3)
    serial = abs(det_b) <= tol * scale_b
    parallel = abs(det_a) <= tol * scale_a
    j = None if serial else -np.linalg.solve(b, a)
    return LevelJacobians(level, a, b, j, det_a, det_b, serial, parallel)


# ---------------------------------------------------------------------------
# mobility
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class JointClassCount:
    """Joint census for the structural mobility formula.

    n_elements counts moving elements, c[k] the number of class-k joints
    (a class-k joint suppresses k relative freedoms) and f_idle the idle
    or redundant freedoms restored to the count.
    """

    n_elements: int
    c1: int = 0
    c2: int = 0
    c3: int = 0
    c4: int = 0
    c5: int = 0
    f_idle: int = 0

    def __post_init__(self):
        vals = (self.n_elements, self.c1, self.c2, self.c3, self.c4,
                self.c5, self.f_idle)
        if any(v < 0 for v in vals):
            raise ValueError("joint census entries must be non-negative")
        if self.n_elements == 0 and any(vals[1:6]):
            raise ValueError("joints require at least one moving element")


def mobility(census: JointClassCount) -> int:
    """Structural mobility M = 6 N - sum_k k C_k + F (integer, exact)."""
    constrained = sum(k * c for k, c in enumerate(
        (census.c1, census.c2, census.c3, census.c4, census.c5), start=1))
    return 6 * census.n_elements - constrained + census.f_idle


#: Census of the actuated parallel module up to the Cardan element: two
#: moving elements driven by one class-3 and two class-4 equivalent
#: joints, with two suppressed rotation freedoms restored (M = 3).
PARALLEL_MODULE_CENSUS = JointClassCount(n_elements=2, c3=1, c4=2, f_idle=2)

#: Census of the end effector (instrument tip): three moving elements
#: through one joint of each class 2..5 (M = 4, motion type 3R-1T).
END_EFFECTOR_CENSUS = JointClassCount(n_elements=3, c2=1, c3=1, c4=1, c5=1)
