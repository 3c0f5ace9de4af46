"""Displacement maps, constraint Jacobians, and mobility tests."""

import math
import random

import numpy as np
import pytest

from mdkin import goldens
from mdkin.geometry import RobotGeometry
from mdkin.robot import (END_EFFECTOR_CENSUS, PARALLEL_MODULE_CENSUS,
                         JointClassCount, LEVELS, WorkspaceError, dq_instrument,
                         dq_parameterizations, dq_ik_displacement, jacobians,
                         mobility, p_to_rcm, p_to_rho, q_to_rho, rcm_to_e,
                         rcm_to_p, rho_to_p, rho_to_q, tip_to_rcm, u_from_rcm)

G = RobotGeometry()
RHO_REF = (50.0, 180.0, math.pi / 3.0)
RCM_REF = (0.35, 0.7, 250.0)


def _rand_rho(rng):
    return (rng.uniform(-80, 80), rng.uniform(160, 210),
            rng.uniform(0.3, math.pi - 0.3))


def _rand_rcm(rng):
    return (rng.uniform(-1.2, 1.2), rng.uniform(0.1, 1.3),
            rng.uniform(150, 380))


# ---------------------------------------------------------------------------
# frozen reference values
# ---------------------------------------------------------------------------

def test_reference_tables_pass():
    results, _ = goldens.run_all(G)
    failures = [r for r in results if not r.passed]
    assert not failures, failures


# ---------------------------------------------------------------------------
# displacement roundtrips and branch structure
# ---------------------------------------------------------------------------

def test_parallel_module_roundtrips_all_branches():
    # each map enumerates its own inverses; the elbow branches pair up
    # as 1<->1, 2<->2, and the actuator-swapped 3<->2, 4<->1
    forward_branch = {1: 1, 2: 2, 3: 2, 4: 1}
    rng = random.Random(11)
    for _ in range(50):
        rho = _rand_rho(rng)
        for branch in (1, 2, 3, 4):
            q = rho_to_q(rho, G, branch)
            back = q_to_rho(q, G, forward_branch[branch])
            assert np.allclose(back, rho, atol=1e-9), branch


def test_parallel_module_branches_are_distinct():
    qs = [rho_to_q(RHO_REF, G, b) for b in (1, 2, 3, 4)]
    for i in range(4):
        for j in range(i + 1, 4):
            assert not np.allclose(qs[i], qs[j], atol=1e-6)


def test_platform_level_roundtrips():
    rng = random.Random(12)
    for _ in range(50):
        rho = _rand_rho(rng)
        p = rho_to_p(rho, G)
        for branch in (1, 2):
            rho_b = p_to_rho(p, G, branch)
            assert np.allclose(rho_to_p(rho_b, G), p, atol=1e-9)
        assert np.allclose(p_to_rho(p, G, 1), rho, atol=1e-9)


def test_rcm_level_roundtrips_all_branches():
    rng = random.Random(13)
    for _ in range(50):
        rcm = _rand_rcm(rng)
        e = rcm_to_e(rcm, G)
        p = rcm_to_p(rcm, G)
        for branch in (1, 2, 3, 4):
            e_cand = tip_to_rcm(e, G, branch)
            assert np.allclose(rcm_to_e(e_cand, G), e, atol=1e-8)
            p_cand = p_to_rcm(p, G, branch)
            assert np.allclose(rcm_to_p(p_cand, G), p, atol=1e-8)
        assert np.allclose(tip_to_rcm(e, G, 1), rcm, atol=1e-9)
        assert np.allclose(p_to_rcm(p, G, 1), rcm, atol=1e-9)


def test_workspace_errors():
    with pytest.raises(WorkspaceError):
        rho_to_q((0.0, 2000.0, 1.0), G)  # rho2 beyond the prismatic link
    with pytest.raises(WorkspaceError):
        tip_to_rcm((0.0, 0.0, 50.0), G)  # on the RCM axis
    with pytest.raises(ValueError):
        rho_to_q(RHO_REF, G, branch=5)


def test_dq_level_solution_matches_platform_level():
    rng = random.Random(14)
    for _ in range(50):
        rcm = _rand_rcm(rng)
        u1, u2, lins = u_from_rcm(rcm)
        rho1, rho2, u3 = dq_ik_displacement(u1, u2, lins, G, branch=1)
        p = rcm_to_p(rcm, G)
        rho = p_to_rho(p, G, branch=1)
        assert rho1 == pytest.approx(rho[0], abs=1e-9)
        assert rho2 == pytest.approx(rho[1], abs=1e-9)
        assert 2.0 * math.atan(u3) == pytest.approx(rho[2], abs=1e-9)


def test_dq_parameterizations_close_the_loop():
    rng = random.Random(15)
    for _ in range(30):
        dqs = dq_parameterizations(_rand_rcm(rng), G)
        plat = np.array(dqs["platform"].real_components())
        tip = dqs["tip"]
        instr = dqs["instrument"]
        joint = np.array(dqs["joint_space"].real_components())
        via_tip = np.array((tip * instr.conjugate()).real_components())
        assert np.allclose(plat, via_tip, atol=1e-12)
        assert np.allclose(plat, joint, atol=1e-12)
        for dq in (dqs["platform"], dqs["tip"]):
            sr, sd = dq.study_residuals()
            assert abs(sr) < 1e-12 and abs(sd) < 1e-9


def test_instrument_dq_is_pure_translation():
    r, t = dq_instrument(G).to_pose()
    assert np.allclose(r, np.eye(3))
    assert np.allclose(t, (G.l, 0.0, 0.0))


# ---------------------------------------------------------------------------
# constraint Jacobians
# ---------------------------------------------------------------------------

def _fd_jacobian(fn, x, h=1e-6):
    x = np.asarray(x, dtype=float)
    cols = []
    for i in range(len(x)):
        dx = np.zeros_like(x)
        dx[i] = h
        cols.append((np.asarray(fn(x + dx)) - np.asarray(fn(x - dx)))
                    / (2 * h))
    return np.column_stack(cols)


@pytest.mark.parametrize("level,inp,fn", [
    ("rho_q", RHO_REF, lambda x: rho_to_q(tuple(x), G, 1)),
    ("p_rho", rho_to_p(RHO_REF, G), lambda x: p_to_rho(tuple(x), G, 1)),
    ("rcm_p", RCM_REF, lambda x: rcm_to_p(tuple(x), G)),
    ("rcm_e", rcm_to_e(RCM_REF, G),
     lambda x: tip_to_rcm(tuple(x), G, 1)),
])
def test_level_jacobian_matches_finite_differences(level, inp, fn):
    out = fn(np.asarray(inp))
    state = tuple(inp) + tuple(out)
    lj = jacobians(level, state, G)
    assert not lj.serial_singular and not lj.parallel_singular
    fd = _fd_jacobian(fn, inp)
    assert np.allclose(lj.j, fd, rtol=1e-6, atol=1e-6)


def test_jacobian_singularity_flags():
    # theta = pi/2 points the instrument along -Z: psi becomes
    # indeterminate and the tip -> RCM Jacobian loses rank
    rcm = (0.4, math.pi / 2, 250.0)
    e = rcm_to_e(rcm, G)
    lj = jacobians("rcm_e", tuple(e) + tuple(rcm), G, tol=1e-9)
    assert lj.serial_singular
    assert lj.j is None


def test_jacobians_rejects_unknown_level():
    with pytest.raises(ValueError, match="unknown level"):
        jacobians("bogus", (0.0,) * 6, G)
    assert set(LEVELS) == {"rho_q", "p_rho", "rcm_p", "rcm_e", "dq"}


# ---------------------------------------------------------------------------
# mobility
# ---------------------------------------------------------------------------

def test_mobility_is_exact():
    assert mobility(PARALLEL_MODULE_CENSUS) == 3
    assert mobility(END_EFFECTOR_CENSUS) == 4


def test_mobility_formula():
    assert mobility(JointClassCount(n_elements=1, c5=1)) == 1  # one pivot
    assert mobility(JointClassCount(n_elements=2, c5=2)) == 2  # 2R chain


def test_joint_census_validation():
    with pytest.raises(ValueError):
        JointClassCount(n_elements=-1)
    with pytest.raises(ValueError):
        JointClassCount(n_elements=0, c5=1)
