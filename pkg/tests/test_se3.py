"""Rigid transform and higher-order velocity-field tests."""

import math
import random

import numpy as np
import pytest

from mdkin.multidual import MultiDual, cos as mcos, sin as msin
from mdkin.se3 import (MultiDualPose, Pose, field_order_slice,
                       higher_order_field, md_higher_order_field, rot_x,
                       rot_y, rot_z)


def test_elementary_rotations():
    for rot, axis in ((rot_x, 0), (rot_y, 1), (rot_z, 2)):
        r = rot(0.37)
        assert np.allclose(r @ r.T, np.eye(3), atol=1e-15)
        assert np.linalg.det(r) == pytest.approx(1.0, abs=1e-14)
        e = np.zeros(3)
        e[axis] = 1.0
        assert np.allclose(r @ e, e)  # rotation axis is fixed


def _deriv(e, k):
    return e.derivative(k) if isinstance(e, MultiDual) else (
        float(e) if k == 0 else 0.0)


def test_rotation_with_jet_angle_carries_derivatives():
    t0 = 0.4
    r = rot_z(MultiDual.variable(t0))
    r0 = np.array([[_deriv(e, 0) for e in row] for row in r])
    r1 = np.array([[_deriv(e, 1) for e in row] for row in r])
    assert np.allclose(r0, rot_z(t0), atol=1e-15)
    h = 1e-6
    fd = (rot_z(t0 + h) - rot_z(t0 - h)) / (2 * h)
    assert np.allclose(r1, fd, atol=1e-9)


def test_pose_compose_inverse_transform():
    rng = random.Random(8)
    for _ in range(30):
        a = Pose(rot_x(rng.uniform(-2, 2)) @ rot_z(rng.uniform(-2, 2)),
                 np.array([rng.uniform(-5, 5) for _ in range(3)]))
        b = Pose(rot_y(rng.uniform(-2, 2)),
                 np.array([rng.uniform(-5, 5) for _ in range(3)]))
        p = np.array([rng.uniform(-3, 3) for _ in range(3)])
        assert np.allclose(a.compose(b).transform(p),
                           a.transform(b.transform(p)), atol=1e-12)
        ident = a.compose(a.inverse())
        assert np.allclose(ident.rotation, np.eye(3), atol=1e-13)
        assert np.allclose(ident.translation, 0.0, atol=1e-12)


def test_pose_validates_rotation():
    with pytest.raises(ValueError):
        Pose(np.eye(3) * 2.0, np.zeros(3))


def _md_pose(t0: float) -> MultiDualPose:
    tj = MultiDual.variable(t0)
    ang = 0.3 + 0.5 * tj
    c, s = mcos(ang), msin(ang)
    zero = MultiDual.constant(0.0)
    one = MultiDual.constant(1.0)
    rotation = [[c, -s, zero], [s, c, zero], [zero, zero, one]]
    translation = [2.0 * tj, tj * tj, msin(tj)]
    return MultiDualPose(rotation, translation)


def _pose_derivs(t0: float, order: int = 3):
    """Per-order derivatives of the same motion, from jets directly."""
    pose = _md_pose(t0)
    return ([pose.rotation_order_slice(k) for k in range(order + 1)],
            [pose.translation_order_slice(k) for k in range(order + 1)])


def test_higher_order_field_reproduces_point_derivatives():
    """(K_n, v_n) applied to a body point gives its n-th space derivative."""
    t0 = 0.9
    r_derivs, t_derivs = _pose_derivs(t0)
    p_body = np.array([1.3, -0.7, 2.1])

    def p_space(t):
        ang = 0.3 + 0.5 * t
        r = rot_z(ang)
        tr = np.array([2.0 * t, t * t, math.sin(t)])
        return r @ p_body + tr

    h = 1e-3
    samples = [p_space(t0 + m * h) for m in range(-3, 4)]
    x0 = p_space(t0)
    fd = {
        1: (samples[4] - samples[2]) / (2 * h),
        2: (samples[4] - 2 * samples[3] + samples[2]) / h ** 2,
        3: (samples[5] - 2 * samples[4] + 2 * samples[2] - samples[1])
           / (2 * h ** 3),
    }
    for n in (1, 2, 3):
        kn, vn = higher_order_field(r_derivs, t_derivs, n)
        got = kn @ x0 + vn
        assert np.allclose(got, fd[n], atol=1e-5), n


def test_md_field_matches_classical_field():
    t0 = 0.9
    pose = _md_pose(t0)
    khat, vhat = md_higher_order_field(pose)
    r_derivs, t_derivs = _pose_derivs(t0)
    k0, v0 = field_order_slice(khat, vhat, 0)
    assert np.allclose(k0, np.eye(3), atol=1e-15)
    assert np.allclose(v0, 0.0, atol=1e-15)
    for n in (1, 2, 3):
        kn_ref, vn_ref = higher_order_field(r_derivs, t_derivs, n)
        kn, vn = field_order_slice(khat, vhat, n)
        assert np.allclose(kn, kn_ref, atol=1e-12)
        assert np.allclose(vn, vn_ref, atol=1e-12)


def test_field_rejects_short_stacks():
    r_derivs, t_derivs = _pose_derivs(0.5, order=2)
    with pytest.raises(ValueError):
        higher_order_field(r_derivs, t_derivs, 3)
    with pytest.raises(ValueError):
        higher_order_field(r_derivs, t_derivs, 0)
