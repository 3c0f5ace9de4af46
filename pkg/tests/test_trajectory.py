"""Jerk-limited planning tests."""

import csv
import math

import numpy as np
import pytest

from mdkin.geometry import RobotGeometry
from mdkin.trajectory import (DEFAULT_ACCEL, DEFAULT_END, DEFAULT_JERK,
                              DEFAULT_START, JerkLimitedProfile,
                              plan_rcm_motion)

G = RobotGeometry()


def _dense_times(duration, n=4000):
    return np.linspace(0.0, duration, n)


def test_profile_limits_and_endpoints():
    p = JerkLimitedProfile(0.0, 10.0, j_max=2.0, a_max=4.0)
    assert p.evaluate(0.0) == (0.0, 0.0, 0.0, 0.0)
    x, v, a, _ = p.evaluate(p.duration)
    assert (x, v, a) == (10.0, 0.0, 0.0)
    for t in _dense_times(p.duration):
        _, v, a, j = p.evaluate(t)
        assert abs(j) <= 2.0 + 1e-12
        assert abs(a) <= 4.0 + 1e-12
    # long moves hit the acceleration limit exactly
    long = JerkLimitedProfile(0.0, 100.0, j_max=2.0, a_max=4.0)
    assert max(abs(long.evaluate(t)[2]) for t in _dense_times(long.duration,
                                                              20000)) \
        == pytest.approx(4.0, abs=1e-6)


def test_profile_short_move_uses_jerk_triangle():
    p = JerkLimitedProfile(0.0, 1e-3, j_max=2.0, a_max=4.0)
    peak_a = max(abs(p.evaluate(t)[2]) for t in _dense_times(p.duration))
    assert peak_a < 4.0  # never reaches the acceleration plateau
    assert p.evaluate(p.duration)[0] == pytest.approx(1e-3, abs=1e-15)


def test_profile_descending_and_zero_moves():
    p = JerkLimitedProfile(5.0, -5.0)
    assert p.evaluate(p.duration)[0] == pytest.approx(-5.0)
    assert min(p.evaluate(t)[3] for t in _dense_times(p.duration)) < 0
    z = JerkLimitedProfile(1.0, 1.0)
    assert z.duration == 0.0
    assert z.evaluate(0.3) == (1.0, 0.0, 0.0, 0.0)


def test_stretch_preserves_endpoints_and_lowers_peaks():
    p = JerkLimitedProfile(0.0, 10.0)
    d0 = p.duration
    peak_j0 = max(abs(p.evaluate(t)[3]) for t in _dense_times(d0))
    p.stretch_to(2.0 * d0)
    assert p.duration == pytest.approx(2.0 * d0)
    assert p.evaluate(p.duration)[0] == pytest.approx(10.0, abs=1e-12)
    peak_j = max(abs(p.evaluate(t)[3]) for t in _dense_times(p.duration))
    assert peak_j == pytest.approx(peak_j0 / 8.0, rel=1e-9)
    with pytest.raises(ValueError):
        p.stretch_to(d0)


def test_profile_consistency_by_finite_differences():
    p = JerkLimitedProfile(0.0, 10.0)
    h = 1e-6
    for t in np.linspace(0.3, p.duration - 0.3, 50):
        x_m, v_m = p.evaluate(t - h)[:2]
        x_p, v_p = p.evaluate(t + h)[:2]
        _, v, a, _ = p.evaluate(t)
        assert (x_p - x_m) / (2 * h) == pytest.approx(v, abs=1e-7)
        assert (v_p - v_m) / (2 * h) == pytest.approx(a, abs=1e-6)


def test_planned_motion_invariants():
    motion = plan_rcm_motion(geometry=G)
    d = motion.duration
    # endpoints in RCM coordinates
    assert np.allclose(motion.rcm_stack(0.0)[0], DEFAULT_START, atol=1e-9)
    assert np.allclose(motion.rcm_stack(d)[0], DEFAULT_END, atol=1e-9)
    # rest-to-rest: derivatives vanish exactly at both ends
    assert np.all(motion.rcm_stack(0.0)[1:] == 0.0)
    assert np.all(motion.rcm_stack(d)[1:] == 0.0)
    # per-coordinate limits hold over the whole motion
    for t in _dense_times(d):
        st = motion.rcm_stack(t)
        assert np.abs(st[2]).max() <= DEFAULT_ACCEL + 1e-12
        assert np.abs(st[3]).max() <= DEFAULT_JERK + 1e-12
    # all coordinates are synchronized to one duration
    for p in motion.profiles:
        if p.duration:
            assert p.duration == pytest.approx(d)


def test_planned_tip_motion_matches_finite_differences():
    motion = plan_rcm_motion(geometry=G)
    h = 1e-4
    for t in np.linspace(1.0, motion.duration - 1.0, 10):
        tip = motion.tip_sample(t)
        xm = motion.tip_sample(t - h).stack[0]
        xp = motion.tip_sample(t + h).stack[0]
        fd_v = (xp - xm) / (2 * h)
        assert np.allclose(tip.stack[1], fd_v, atol=1e-5)


def test_sample_spaces():
    motion = plan_rcm_motion(geometry=G)
    t = 0.4 * motion.duration
    assert motion.tip_sample(t).space == "tip"
    assert motion.rho_sample(t).space == "rho"
    assert motion.dq_sample(t).space == "dq"
    # dq displacement row is a unit dual quaternion
    row = motion.dq_sample(t).stack[0]
    assert row[:4] @ row[:4] == pytest.approx(1.0, abs=1e-12)
    assert row[:4] @ row[4:] == pytest.approx(0.0, abs=1e-12)


def test_export_csv(tmp_path):
    motion = plan_rcm_motion(geometry=G)
    path = tmp_path / "motion.csv"
    n = motion.export_csv(path, rate_hz=25.0)
    with open(path) as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["t"] + [f"{kind}_{ax}" for kind in
                               ("pos", "vel", "acc", "jerk") for ax in "xyz"]
    assert len(rows) == n + 1
    assert float(rows[-1][0]) == pytest.approx(motion.duration, abs=1e-6)
    tip_end = motion.tip_sample(motion.duration).stack[0]
    assert np.allclose([float(v) for v in rows[-1][1:4]], tip_end)
    with pytest.raises(ValueError):
        motion.export_csv(path, rate_hz=0.0)


def test_invalid_limits_rejected():
    with pytest.raises(ValueError):
        JerkLimitedProfile(0.0, 1.0, j_max=0.0)
    with pytest.raises(ValueError):
        JerkLimitedProfile(0.0, 1.0, a_max=-1.0)
