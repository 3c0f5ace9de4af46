"""Higher-order inverse and forward kinematics solvers.

Eight inverse solvers cover three formalisms, each in two flavors:

======  ==========================  ============================
solver  formalism                   derivative flavor
======  ==========================  ============================
alg1    joint-level map rho -> q    classical sequential
alg2    joint-level map rho -> q    multidual (jet) lift
alg3    constraint Jacobian chain   classical sequential
alg4    constraint Jacobian chain   multidual (jet) lift
alg5    translation-field matching  classical, order by order
alg6    translation-field matching  multidual (jet) lift
alg7    dual quaternion loop        classical sequential
alg8    dual quaternion loop        multidual (jet) lift
======  ==========================  ============================

alg1/2 map a rho-space sample to active joints q; alg3..8 map a tip
(task-space) sample, or its dual quaternion encoding for alg7/8, to rho.
fk1..fk8 are the matching forward solvers, used for round-trip checks.

All solvers take and return a KinematicSample carrying the value and its
first three time derivatives.  Both flavors of a pair compute the
displacement row through the same scalar code path, so their
displacement outputs agree bit for bit; only the derivative machinery
differs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import _levels_gen as gen
from . import robot
from .geometry import RobotGeometry
from .multidual import MultiDual, atan, tan
from .quat import DualQuaternion

ORDER = 3

SPACES = {
    "rho": 3,  # intermediate coordinates (rho1, rho2, rho3)
    "q": 3,  # active joints (q1, q2, q3)
    "tip": 3,  # instrument tip position E (mm)
    "dq": 8,  # unit dual quaternion of the tip frame
}


@dataclass(frozen=True)
class KinematicSample:
    """A point of a motion: value and time derivatives up to order 3.

    stack has shape (4, dim): rows are the value, velocity, acceleration
    and jerk of the coordinates of the given space.
    """

    space: str
    stack: np.ndarray

    def __post_init__(self):
        if self.space not in SPACES:
            raise ValueError(f"unknown space {self.space!r}")
        st = np.asarray(self.stack, dtype=float)
        if st.shape != (ORDER + 1, SPACES[self.space]):
            raise ValueError(
                f"stack for space {self.space!r} must have shape "
                f"({ORDER + 1}, {SPACES[self.space]}), got {st.shape}")
        object.__setattr__(self, "stack", st)

    @property
    def value(self) -> np.ndarray:
        return self.stack[0]

    def derivative(self, k: int) -> np.ndarray:
        return self.stack[k]


# ---------------------------------------------------------------------------
# jet/stack plumbing
# ---------------------------------------------------------------------------

_INV_FACT = (1.0, 1.0, 0.5, 1.0 / 6.0)


def jets_from_stack(stack: np.ndarray, order: int = ORDER) -> tuple:
    """One MultiDual per column, carrying derivatives up to `order`."""
    return tuple(
        MultiDual(tuple(stack[k, i] * _INV_FACT[k] for k in range(order + 1)))
        for i in range(stack.shape[1]))


def stack_from_jets(jets) -> np.ndarray:
    out = np.zeros((ORDER + 1, len(jets)))
    for i, j in enumerate(jets):
        for k in range(ORDER + 1):
            out[k, i] = j.derivative(k) if k <= j.order else 0.0
    return out


def _velocity_jet(stack: np.ndarray, i: int) -> MultiDual:
    """Order-2 jet of the velocity of column i: v + eps a + eps^2/2 j."""
    return MultiDual((stack[1, i], stack[2, i], 0.5 * stack[3, i]))


def _md_solve3(a, b):
    """Solve a 3x3 system with MultiDual entries (pivot on real parts)."""
    m = [list(row) + [b[i]] for i, row in enumerate(a)]
    for col in range(3):
        piv = max(range(col, 3), key=lambda r: abs(robot._re(m[r][col])))
        if robot._re(m[piv][col]) == 0.0:
            raise robot.WorkspaceError("singular level Jacobian")
        m[col], m[piv] = m[piv], m[col]
        for r in range(col + 1, 3):
            f = m[r][col] / m[col][col]
            for c in range(col, 4):
                m[r][c] = m[r][c] - f * m[col][c]
    x = [None] * 3
    for r in (2, 1, 0):
        acc = m[r][3]
        for c in range(r + 1, 3):
            acc = acc - m[r][c] * x[c]
        x[r] = acc / m[r][r]
    return x


def _quotient_stack(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Derivative stack of a/b from the stacks of a and b (Leibniz)."""
    c = np.zeros(ORDER + 1)
    c[0] = a[0] / b[0]
    c[1] = (a[1] - c[0] * b[1]) / b[0]
    c[2] = (a[2] - c[0] * b[2] - 2.0 * c[1] * b[1]) / b[0]
    c[3] = (a[3] - c[0] * b[3] - 3.0 * c[1] * b[2] - 3.0 * c[2] * b[1]) / b[0]
    return c


def _compose_stack(u: np.ndarray, fders) -> np.ndarray:
    """Stack of f(u) from the stack of u and derivatives f', f'', f'''."""
    out = np.zeros(ORDER + 1)
    out[0] = fders[0]
    out[1] = fders[1] * u[1]
    out[2] = fders[2] * u[1] ** 2 + fders[1] * u[2]
    out[3] = (fders[3] * u[1] ** 3 + 3.0 * fders[2] * u[1] * u[2]
              + fders[1] * u[3])
    return out


def _halftan_stack(ang: np.ndarray) -> np.ndarray:
    """Stack of u = tan(x/2) from the stack of the angle x."""
    u = math.tan(0.5 * ang[0])
    n = 1.0 + u * u
    f1 = 0.5 * n
    f2 = 0.5 * u * n
    f3 = 0.25 * (1.0 + 3.0 * u * u) * n
    return _compose_stack(ang, (u, f1, f2, f3))


def _angle_from_halftan_stack(u: np.ndarray) -> np.ndarray:
    """Stack of x = 2*atan(u) from the stack of u."""
    d = 1.0 / (1.0 + u[0] * u[0])
    f1 = 2.0 * d
    f2 = -4.0 * u[0] * d * d
    f3 = (12.0 * u[0] * u[0] - 4.0) * d * d * d
    return _compose_stack(u, (2.0 * math.atan(u[0]), f1, f2, f3))


# ---------------------------------------------------------------------------
# per-level propagation
# ---------------------------------------------------------------------------

def _gt(g: RobotGeometry) -> tuple:
    return (g.l, g.l0, g.l1, g.l2, g.l3, g.l4)


def _np3(m) -> np.ndarray:
    return np.array(m, dtype=float)


def _push_classical(level: str, in_stack: np.ndarray,
                    out0, g: RobotGeometry) -> np.ndarray:
    """Classical propagation through one constraint level (input -> output).

    Solves B q_dot = -A x_dot and its differentiated forms
    J_dot = -inv(B) (A_dot + B_dot J),
    J_ddot = -inv(B) (A_ddot + B_ddot J + 2 B_dot J_dot)
    sequentially, exactly as the closed-form derivation prescribes.
    """
    gt = _gt(g)
    fa = getattr(gen, f"{level}_A")
    fb = getattr(gen, f"{level}_B")
    fa1 = getattr(gen, f"{level}_A_d1")
    fb1 = getattr(gen, f"{level}_B_d1")
    fa2 = getattr(gen, f"{level}_A_d2")
    fb2 = getattr(gen, f"{level}_B_d2")

    s = tuple(in_stack[0]) + tuple(out0)
    a = _np3(fa(s, gt))
    b = _np3(fb(s, gt))
    j = -np.linalg.solve(b, a)
    vel = j @ in_stack[1]
    sd = tuple(in_stack[1]) + tuple(vel)
    ad = _np3(fa1(s, sd, gt))
    bd = _np3(fb1(s, sd, gt))
    jd = -np.linalg.solve(b, ad + bd @ j)
    acc = jd @ in_stack[1] + j @ in_stack[2]
    sdd = tuple(in_stack[2]) + tuple(acc)
    add = _np3(fa2(s, sd, sdd, gt))
    bdd = _np3(fb2(s, sd, sdd, gt))
    jdd = -np.linalg.solve(b, add + bdd @ j + 2.0 * (bd @ jd))
    jerk = jdd @ in_stack[1] + 2.0 * (jd @ in_stack[2]) + j @ in_stack[3]
    return np.vstack([np.asarray(out0, dtype=float), vel, acc, jerk])


def _push_classical_rev(level: str, out_stack: np.ndarray,
                        in0, g: RobotGeometry) -> np.ndarray:
    """Classical propagation against a level (output -> input).

    Mirror of _push_classical with G = -inv(A) B.
    """
    gt = _gt(g)
    fa = getattr(gen, f"{level}_A")
    fb = getattr(gen, f"{level}_B")
    fa1 = getattr(gen, f"{level}_A_d1")
    fb1 = getattr(gen, f"{level}_B_d1")
    fa2 = getattr(gen, f"{level}_A_d2")
    fb2 = getattr(gen, f"{level}_B_d2")

    s = tuple(in0) + tuple(out_stack[0])
    a = _np3(fa(s, gt))
    b = _np3(fb(s, gt))
    gmat = -np.linalg.solve(a, b)
    vel = gmat @ out_stack[1]
    sd = tuple(vel) + tuple(out_stack[1])
    ad = _np3(fa1(s, sd, gt))
    bd = _np3(fb1(s, sd, gt))
    gd = -np.linalg.solve(a, bd + ad @ gmat)
    acc = gd @ out_stack[1] + gmat @ out_stack[2]
    sdd = tuple(acc) + tuple(out_stack[2])
    add = _np3(fa2(s, sd, sdd, gt))
    bdd = _np3(fb2(s, sd, sdd, gt))
    gdd = -np.linalg.solve(a, bdd + add @ gmat + 2.0 * (ad @ gd))
    jerk = (gdd @ out_stack[1] + 2.0 * (gd @ out_stack[2])
            + gmat @ out_stack[3])
    return np.vstack([np.asarray(in0, dtype=float), vel, acc, jerk])


def _push_multidual(level: str, in_stack: np.ndarray, out0, out_jets,
                    g: RobotGeometry) -> np.ndarray:
    """Multidual propagation through one constraint level.

    The constraint matrices are evaluated once on order-2 jets, giving
    J_hat = J + eps J_dot + eps^2/2 J_ddot implicitly; multiplying the
    velocity jet of the input then yields velocity, acceleration and
    jerk in one pass.  out_jets are the order-2 jets of the level output
    (from the jet-lifted displacement map).
    """
    gt = _gt(g)
    in_jets = jets_from_stack(in_stack, order=2)
    s = in_jets + tuple(out_jets)
    a = getattr(gen, f"{level}_A")(s, gt)
    b = getattr(gen, f"{level}_B")(s, gt)
    xvel = [_velocity_jet(in_stack, i) for i in range(3)]
    rhs = [-(a[r][0] * xvel[0] + a[r][1] * xvel[1] + a[r][2] * xvel[2])
           for r in range(3)]
    qvel = _md_solve3(b, rhs)
    out = np.zeros((ORDER + 1, 3))
    out[0] = np.asarray(out0, dtype=float)
    for i, jet in enumerate(qvel):
        d = jet.derivatives()
        out[1, i] = d[0]
        out[2, i] = d[1]
        out[3, i] = d[2]
    return out


# ---------------------------------------------------------------------------
# inverse solvers
# ---------------------------------------------------------------------------

def _require(sample: KinematicSample, space: str) -> None:
    if sample.space != space:
        raise ValueError(f"solver expects a {space!r} sample, got "
                         f"{sample.space!r}")


def alg1(sample: KinematicSample, g: RobotGeometry,
         branch: int = 1) -> KinematicSample:
    """rho -> q, classical constraint-Jacobian recursion."""
    _require(sample, "rho")
    q0 = robot.rho_to_q(tuple(sample.value), g, branch)
    return KinematicSample("q", _push_classical("rho_q", sample.stack, q0, g))


def alg2(sample: KinematicSample, g: RobotGeometry,
         branch: int = 1) -> KinematicSample:
    """rho -> q, multidual lift of the same constraint Jacobian."""
    _require(sample, "rho")
    q0 = robot.rho_to_q(tuple(sample.value), g, branch)
    rho_jets = jets_from_stack(sample.stack, order=2)
    q_jets = robot.rho_to_q(rho_jets, g, branch)
    return KinematicSample(
        "q", _push_multidual("rho_q", sample.stack, q0, q_jets, g))


def alg3(sample: KinematicSample, g: RobotGeometry,
         branch: int = 1) -> KinematicSample:
    """tip -> rho through the level chain, classical flavor."""
    _require(sample, "tip")
    e0 = tuple(sample.value)
    rcm0 = robot.tip_to_rcm(e0, g, branch=1)
    p0 = robot.rcm_to_p(rcm0, g)
    rho0 = robot.p_to_rho(p0, g, branch)
    rcm_stack = _push_classical("rcm_e", sample.stack, rcm0, g)
    p_stack = _push_classical("rcm_p", rcm_stack, p0, g)
    return KinematicSample("rho", _push_classical("p_rho", p_stack, rho0, g))


def alg4(sample: KinematicSample, g: RobotGeometry,
         branch: int = 1) -> KinematicSample:
    """tip -> rho through the level chain, multidual flavor."""
    _require(sample, "tip")
    e0 = tuple(sample.value)
    rcm0 = robot.tip_to_rcm(e0, g, branch=1)
    p0 = robot.rcm_to_p(rcm0, g)
    rho0 = robot.p_to_rho(p0, g, branch)
    e_jets = jets_from_stack(sample.stack, order=2)
    rcm_jets = robot.tip_to_rcm(e_jets, g, branch=1)
    p_jets = robot.rcm_to_p(rcm_jets, g)
    rho_jets = robot.p_to_rho(p_jets, g, branch)
    rcm_stack = _push_multidual("rcm_e", sample.stack, rcm0, rcm_jets, g)
    p_stack = _push_multidual("rcm_p", rcm_stack, p0, p_jets, g)
    return KinematicSample(
        "rho", _push_multidual("p_rho", p_stack, rho0, rho_jets, g))


def alg5(sample: KinematicSample, g: RobotGeometry,
         branch: int = 1) -> KinematicSample:
    """tip -> rho by matching translation fields order by order."""
    _require(sample, "tip")
    gt = _gt(g)
    e0 = tuple(sample.value)
    rcm0 = robot.tip_to_rcm(e0, g, branch=1)
    p0 = robot.rcm_to_p(rcm0, g)
    rho0 = robot.p_to_rho(p0, g, branch)

    me = np.array(gen.map_e_jac(rcm0, gt), dtype=float)
    rcm1 = np.linalg.solve(me, sample.stack[1])
    b2 = np.array(gen.map_e_bias2(rcm0, tuple(rcm1), gt))
    rcm2 = np.linalg.solve(me, sample.stack[2] - b2)
    b3 = np.array(gen.map_e_bias3(rcm0, tuple(rcm1), tuple(rcm2), gt))
    rcm3 = np.linalg.solve(me, sample.stack[3] - b3)

    mp1 = np.array(gen.map_p1_jac(rcm0, gt), dtype=float)
    p1 = mp1 @ rcm1
    p2 = mp1 @ rcm2 + np.array(gen.map_p1_bias2(rcm0, tuple(rcm1), gt))
    p3 = mp1 @ rcm3 + np.array(
        gen.map_p1_bias3(rcm0, tuple(rcm1), tuple(rcm2), gt))

    mp2 = np.array(gen.map_p2_jac(rho0, gt), dtype=float)
    rho1 = np.linalg.solve(mp2, p1)
    rho2 = np.linalg.solve(mp2, p2 - np.array(
        gen.map_p2_bias2(rho0, tuple(rho1), gt)))
    rho3 = np.linalg.solve(mp2, p3 - np.array(
        gen.map_p2_bias3(rho0, tuple(rho1), tuple(rho2), gt)))
    return KinematicSample(
        "rho", np.vstack([np.asarray(rho0), rho1, rho2, rho3]))


def alg6(sample: KinematicSample, g: RobotGeometry,
         branch: int = 1) -> KinematicSample:
    """tip -> rho by lifting the collinearity P = E (l_ins - l)/l_ins."""
    _require(sample, "tip")
    e0 = tuple(sample.value)
    rcm0 = robot.tip_to_rcm(e0, g, branch=1)
    p0 = robot.rcm_to_p(rcm0, g)
    rho0 = robot.p_to_rho(p0, g, branch)
    ex, ey, ez = jets_from_stack(sample.stack)
    from .multidual import sqrt as md_sqrt
    lins = md_sqrt(ex * ex + ey * ey + ez * ez)
    ratio = (lins - g.l) / lins
    p_jets = (ex * ratio, ey * ratio, ez * ratio)
    rho_jets = robot.p_to_rho(p_jets, g, branch)
    out = stack_from_jets(rho_jets)
    out[0] = np.asarray(rho0, dtype=float)
    return KinematicSample("rho", out)


def _dq_stacks(sample: KinematicSample) -> np.ndarray:
    return sample.stack  # (4, 8), columns x0..x3, y0..y3


def _extract_u_stacks(dq_stack: np.ndarray,
                      g: RobotGeometry) -> tuple[np.ndarray, ...]:
    """(u1, u2, l_ins) stacks from the tip dual quaternion stack."""
    qlc = robot.dq_instrument(g).conjugate()
    rows = []
    for k in range(ORDER + 1):
        qp = DualQuaternion.from_components(dq_stack[k]) * qlc
        rows.append(qp.components())
    qp_stack = np.array(rows, dtype=float)
    x0 = qp_stack[:, 0]
    u1 = _quotient_stack(qp_stack[:, 3], x0)
    u2 = _quotient_stack(qp_stack[:, 2], x0)
    lins = 2.0 * _quotient_stack(qp_stack[:, 5], x0)
    lins[0] += g.l
    return u1, u2, lins


def alg7(sample: KinematicSample, g: RobotGeometry,
         branch: int = 1) -> KinematicSample:
    """dual quaternion tip sample -> rho, classical flavor."""
    _require(sample, "dq")
    u1, u2, lins = _extract_u_stacks(sample.stack, g)
    w0 = robot.dq_ik_displacement(u1[0], u2[0], lins[0], g, branch)
    in_stack = np.column_stack([u1, u2, lins])
    out = _push_classical("dq", in_stack, w0, g)
    rho3 = _angle_from_halftan_stack(out[:, 2])
    out[:, 2] = rho3
    return KinematicSample("rho", out)


def alg8(sample: KinematicSample, g: RobotGeometry,
         branch: int = 1) -> KinematicSample:
    """dual quaternion tip sample -> rho, multidual flavor."""
    _require(sample, "dq")
    comp_jets = jets_from_stack(sample.stack)
    qe = DualQuaternion.from_components(comp_jets)
    qp = qe * robot.dq_instrument(g).conjugate()
    x0 = qp.real.w
    u1 = qp.real.z / x0
    u2 = qp.real.y / x0
    lins = g.l + 2.0 * (qp.dual.x / x0)
    rho1, rho2, u3 = robot.dq_ik_displacement(u1, u2, lins, g, branch)
    rho3 = 2.0 * atan(u3)
    out = stack_from_jets((rho1, rho2, rho3))
    # displacement through the same scalar path as alg7
    u1s, u2s, linss = _extract_u_stacks(sample.stack, g)
    w0 = robot.dq_ik_displacement(u1s[0], u2s[0], linss[0], g, branch)
    out[0] = (w0[0], w0[1], 2.0 * math.atan(w0[2]))
    return KinematicSample("rho", out)


# ---------------------------------------------------------------------------
# forward solvers (round-trip counterparts)
# ---------------------------------------------------------------------------

def fk1(sample: KinematicSample, g: RobotGeometry,
        branch: int = 1) -> KinematicSample:
    _require(sample, "q")
    rho0 = robot.q_to_rho(tuple(sample.value), g, branch)
    return KinematicSample(
        "rho", _push_classical_rev("rho_q", sample.stack, rho0, g))


def fk2(sample: KinematicSample, g: RobotGeometry,
        branch: int = 1) -> KinematicSample:
    _require(sample, "q")
    rho0 = robot.q_to_rho(tuple(sample.value), g, branch)
    q_jets = jets_from_stack(sample.stack)
    rho_jets = robot.q_to_rho(q_jets, g, branch)
    out = stack_from_jets(rho_jets)
    out[0] = np.asarray(rho0, dtype=float)
    return KinematicSample("rho", out)


def _fk_task_displacements(rho0, g: RobotGeometry):
    p0 = robot.rho_to_p(rho0, g)
    rcm0 = robot.p_to_rcm(p0, g, branch=1)
    e0 = robot.rcm_to_e(rcm0, g)
    return p0, rcm0, e0


def fk3(sample: KinematicSample, g: RobotGeometry,
        branch: int = 1) -> KinematicSample:
    _require(sample, "rho")
    p0, rcm0, e0 = _fk_task_displacements(tuple(sample.value), g)
    p_stack = _push_classical_rev("p_rho", sample.stack, p0, g)
    rcm_stack = _push_classical_rev("rcm_p", p_stack, rcm0, g)
    return KinematicSample(
        "tip", _push_classical_rev("rcm_e", rcm_stack, e0, g))


def fk4(sample: KinematicSample, g: RobotGeometry,
        branch: int = 1) -> KinematicSample:
    _require(sample, "rho")
    p0, rcm0, e0 = _fk_task_displacements(tuple(sample.value), g)
    rho_jets = jets_from_stack(sample.stack)
    p_jets = robot.rho_to_p(rho_jets, g)
    rcm_jets = robot.p_to_rcm(p_jets, g, branch=1)
    e_jets = robot.rcm_to_e(rcm_jets, g)
    out = stack_from_jets(e_jets)
    out[0] = np.asarray(e0, dtype=float)
    return KinematicSample("tip", out)


def fk5(sample: KinematicSample, g: RobotGeometry,
        branch: int = 1) -> KinematicSample:
    _require(sample, "rho")
    gt = _gt(g)
    rho0 = tuple(sample.value)
    p0, rcm0, e0 = _fk_task_displacements(rho0, g)

    mp2 = np.array(gen.map_p2_jac(rho0, gt), dtype=float)
    rho1, rho2, rho3 = (tuple(sample.stack[k]) for k in (1, 2, 3))
    p1 = mp2 @ sample.stack[1]
    p2 = mp2 @ sample.stack[2] + np.array(gen.map_p2_bias2(rho0, rho1, gt))
    p3 = mp2 @ sample.stack[3] + np.array(
        gen.map_p2_bias3(rho0, rho1, rho2, gt))

    mp1 = np.array(gen.map_p1_jac(rcm0, gt), dtype=float)
    rcm1 = np.linalg.solve(mp1, p1)
    rcm2 = np.linalg.solve(mp1, p2 - np.array(
        gen.map_p1_bias2(rcm0, tuple(rcm1), gt)))
    rcm3 = np.linalg.solve(mp1, p3 - np.array(
        gen.map_p1_bias3(rcm0, tuple(rcm1), tuple(rcm2), gt)))

    me = np.array(gen.map_e_jac(rcm0, gt), dtype=float)
    e1 = me @ rcm1
    e2 = me @ rcm2 + np.array(gen.map_e_bias2(rcm0, tuple(rcm1), gt))
    e3 = me @ rcm3 + np.array(
        gen.map_e_bias3(rcm0, tuple(rcm1), tuple(rcm2), gt))
    return KinematicSample("tip", np.vstack([np.asarray(e0), e1, e2, e3]))


def fk6(sample: KinematicSample, g: RobotGeometry,
        branch: int = 1) -> KinematicSample:
    _require(sample, "rho")
    p0, rcm0, e0 = _fk_task_displacements(tuple(sample.value), g)
    rho_jets = jets_from_stack(sample.stack)
    px, py, pz = robot.rho_to_p(rho_jets, g)
    from .multidual import sqrt as md_sqrt
    d = -md_sqrt(px * px + py * py + pz * pz)
    ratio = (g.l + d) / d
    e_jets = (px * ratio, py * ratio, pz * ratio)
    out = stack_from_jets(e_jets)
    out[0] = np.asarray(e0, dtype=float)
    return KinematicSample("tip", out)


def _dq_stack_from_u(u1: np.ndarray, u2: np.ndarray,
                     lins: np.ndarray, g: RobotGeometry) -> np.ndarray:
    """Tip dual quaternion stack from (u1, u2, l_ins) stacks."""
    jets = [MultiDual((s[0], s[1], 0.5 * s[2], s[3] / 6.0))
            for s in (u1, u2, lins)]
    qe = robot.dq_tip(jets[0], jets[1], jets[2], g)
    out = np.zeros((ORDER + 1, 8))
    for i, c in enumerate(qe.components()):
        for k in range(ORDER + 1):
            out[k, i] = c.derivative(k)
    return out


def fk7(sample: KinematicSample, g: RobotGeometry,
        branch: int = 1) -> KinematicSample:
    _require(sample, "rho")
    rho0 = tuple(sample.value)
    p0, rcm0, e0 = _fk_task_displacements(rho0, g)
    u0 = robot.u_from_rcm(rcm0)
    w_stack = sample.stack.copy()
    w_stack[:, 2] = _halftan_stack(sample.stack[:, 2])
    u_stack = _push_classical_rev("dq", w_stack, u0, g)
    return KinematicSample(
        "dq", _dq_stack_from_u(u_stack[:, 0], u_stack[:, 1],
                               u_stack[:, 2], g))


def fk8(sample: KinematicSample, g: RobotGeometry,
        branch: int = 1) -> KinematicSample:
    _require(sample, "rho")
    rho_jets = jets_from_stack(sample.stack)
    p_jets = robot.rho_to_p(rho_jets, g)
    psi, th, lins = robot.p_to_rcm(p_jets, g, branch=1)
    u1 = tan(psi / 2.0)
    u2 = tan(th / 2.0)
    qe = robot.dq_tip(u1, u2, lins, g)
    out = np.zeros((ORDER + 1, 8))
    for i, c in enumerate(qe.components()):
        for k in range(ORDER + 1):
            out[k, i] = c.derivative(k)
    return KinematicSample("dq", out)


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SolverId:
    key: str
    formalism: str  # "jacobian", "matrix" or "dualquat"
    flavor: str  # "classical" or "multidual"
    input_space: str
    output_space: str
    description: str


_SOLVER_DEFS = (
    ("alg1", "jacobian", "classical", "rho", "q",
     "joint-level inverse map, sequential Jacobian recursion", alg1),
    ("alg2", "jacobian", "multidual", "rho", "q",
     "joint-level inverse map, jet-lifted Jacobian", alg2),
    ("alg3", "jacobian", "classical", "tip", "rho",
     "level-chain inverse kinematics, sequential Jacobian recursion", alg3),
    ("alg4", "jacobian", "multidual", "tip", "rho",
     "level-chain inverse kinematics, jet-lifted Jacobians", alg4),
    ("alg5", "matrix", "classical", "tip", "rho",
     "translation-field matching, per-order linear solves", alg5),
    ("alg6", "matrix", "multidual", "tip", "rho",
     "translation-field matching, jet-lifted closed form", alg6),
    ("alg7", "dualquat", "classical", "dq", "rho",
     "dual quaternion loop, sequential derivative extraction", alg7),
    ("alg8", "dualquat", "multidual", "dq", "rho",
     "dual quaternion loop, jet-lifted closed form", alg8),
    ("fk1", "jacobian", "classical", "q", "rho",
     "forward counterpart of alg1", fk1),
    ("fk2", "jacobian", "multidual", "q", "rho",
     "forward counterpart of alg2", fk2),
    ("fk3", "jacobian", "classical", "rho", "tip",
     "forward counterpart of alg3", fk3),
    ("fk4", "jacobian", "multidual", "rho", "tip",
     "forward counterpart of alg4", fk4),
    ("fk5", "matrix", "classical", "rho", "tip",
     "forward counterpart of alg5", fk5),
    ("fk6", "matrix", "multidual", "rho", "tip",
     "forward counterpart of alg6", fk6),
    ("fk7", "dualquat", "classical", "rho", "dq",
     "forward counterpart of alg7", fk7),
    ("fk8", "dualquat", "multidual", "rho", "dq",
     "forward counterpart of alg8", fk8),
)

SOLVERS: dict[str, tuple[SolverId, Callable]] = {
    key: (SolverId(key, formalism, flavor, ins, outs, desc), fn)
    for key, formalism, flavor, ins, outs, desc, fn in _SOLVER_DEFS
}

#: Flavor pairs benchmarked against each other (classical, multidual).
PAIRS = (("alg1", "alg2"), ("alg3", "alg4"), ("alg5", "alg6"),
         ("alg7", "alg8"))


def solve(key: str, sample: KinematicSample, g: RobotGeometry,
          branch: int = 1) -> KinematicSample:
    """Run a registered solver by key."""
    try:
        _, fn = SOLVERS[key]
    except KeyError:
        raise ValueError(
            f"unknown solver {key!r}; known: {sorted(SOLVERS)}") from None
    return fn(sample, g, branch)
