"""Quaternion and dual quaternion representation tests."""

import math
import random

import numpy as np
import pytest

from mdkin.multidual import MultiDual
from mdkin.quat import (DualQuaternion, Quaternion, dq_derivative_stack,
                        hmd_motion)
from mdkin.se3 import rot_x, rot_y, rot_z


def _random_rotation(rng) -> np.ndarray:
    return (rot_z(rng.uniform(-math.pi, math.pi))
            @ rot_y(rng.uniform(-1.5, 1.5))
            @ rot_x(rng.uniform(-math.pi, math.pi)))


def test_quaternion_product_and_conjugate():
    rng = random.Random(2)
    for _ in range(50):
        a = Quaternion(*(rng.uniform(-1, 1) for _ in range(4))).normalized()
        b = Quaternion(*(rng.uniform(-1, 1) for _ in range(4))).normalized()
        # |ab| = |a||b| and (ab)* = b* a*
        assert (a * b).norm() == pytest.approx(1.0, abs=1e-12)
        lhs = (a * b).conjugate()
        rhs = b.conjugate() * a.conjugate()
        assert np.allclose(lhs.components(), rhs.components(), atol=1e-14)


def test_rotation_matrix_roundtrip():
    rng = random.Random(3)
    for _ in range(200):
        r = _random_rotation(rng)
        q = Quaternion.from_rotation_matrix(r)
        assert q.norm() == pytest.approx(1.0, abs=1e-12)
        assert np.allclose(q.to_rotation_matrix(), r, atol=1e-12)


def test_rotation_matrix_conversion_near_degenerate_traces():
    # exercise all four extraction branches
    for r in (np.eye(3), rot_x(math.pi), rot_y(math.pi), rot_z(math.pi),
              rot_x(math.pi - 1e-9) @ rot_z(1e-9)):
        q = Quaternion.from_rotation_matrix(r)
        assert np.allclose(q.to_rotation_matrix(), r, atol=1e-12)


def test_rotate_matches_matrix_action():
    rng = random.Random(4)
    for _ in range(50):
        r = _random_rotation(rng)
        q = Quaternion.from_rotation_matrix(r)
        v = [rng.uniform(-5, 5) for _ in range(3)]
        assert np.allclose(q.rotate(v), r @ v, atol=1e-12)


def test_dual_quaternion_pose_roundtrip_and_study_conditions():
    rng = random.Random(5)
    for _ in range(100):
        r = _random_rotation(rng)
        t = np.array([rng.uniform(-100, 100) for _ in range(3)])
        dq = DualQuaternion.from_pose(r, t)
        sr, sd = dq.study_residuals()
        assert abs(sr) < 1e-12 and abs(sd) < 1e-10
        r2, t2 = dq.to_pose()
        assert np.allclose(r2, r, atol=1e-12)
        assert np.allclose(t2, t, atol=1e-9)


def test_dual_quaternion_product_composes_poses():
    rng = random.Random(6)
    for _ in range(50):
        ra, ta = _random_rotation(rng), np.array([rng.uniform(-5, 5)
                                                  for _ in range(3)])
        rb, tb = _random_rotation(rng), np.array([rng.uniform(-5, 5)
                                                  for _ in range(3)])
        ab = DualQuaternion.from_pose(ra, ta) * DualQuaternion.from_pose(rb, tb)
        r2, t2 = ab.to_pose()
        assert np.allclose(r2, ra @ rb, atol=1e-12)
        assert np.allclose(t2, ra @ tb + ta, atol=1e-10)


def test_pure_translation_dual_quaternion():
    dq = DualQuaternion.from_translation((3.0, -2.0, 7.0))
    r, t = dq.to_pose()
    assert np.allclose(r, np.eye(3))
    assert np.allclose(t, (3.0, -2.0, 7.0))


def test_hmd_motion_derivative_stack():
    """Jet-valued dual quaternion carries the pose derivatives."""
    def q_of(t):
        half = 0.5 * (0.3 + 0.2 * t)
        c, s = np.cos(half), np.sin(half)
        return (c, s, 0.0, 0.0)  # rotation about x

    t0 = 0.7
    tj = MultiDual.variable(t0)
    from mdkin.multidual import cos as mcos, sin as msin
    half = 0.5 * (0.3 + 0.2 * tj)
    qj = Quaternion(mcos(half), msin(half), 0.0, 0.0)
    trans = (2.0 * tj, tj * tj, MultiDual.constant(1.0))
    stack = dq_derivative_stack(hmd_motion(qj, trans))

    assert len(stack) == 4
    # displacement slice agrees with the scalar construction
    r0, tr0 = stack[0].to_pose()
    dq_ref = DualQuaternion.from_pose(
        rot_x(0.3 + 0.2 * t0), (2.0 * t0, t0 * t0, 1.0))
    rr, tt = dq_ref.to_pose()
    assert np.allclose(r0, rr, atol=1e-14)
    assert np.allclose(tr0, tt, atol=1e-12)
    # first derivative slice matches finite differences of components
    h = 1e-6
    def comps(t):
        q = Quaternion(*q_of(t))
        y = Quaternion.from_vector((2.0 * t, t * t, 1.0)).scale(0.5) * q
        return np.array(DualQuaternion(q, y).components())
    fd = (comps(t0 + h) - comps(t0 - h)) / (2 * h)
    assert np.allclose(stack[1].components(), fd, atol=1e-7)
