"""Rigid body poses and higher-order kinematic fields.

The higher-order fields of a moving frame (R(t), r(t)) are

    K_n = d^n R / dt^n * R^T         (velocity, acceleration, jerk, ...)
    v_n = d^n r / dt^n - K_n * r

so that any body-fixed point p(t) = R p0 + r satisfies
d^n p / dt^n = K_n p + v_n.  The multidual counterparts bundle all orders
in one object: K_hat = R_hat * R(0)^T = I + eps K1 + eps^2/2 K2 + ...
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .multidual import MultiDual, sin, cos

_FACT = (1.0, 1.0, 2.0, 6.0, 24.0)


def _is_md(x) -> bool:
    return isinstance(x, MultiDual)


def _rot(c, s, axis: int):
    """3x3 rotation about a coordinate axis given cos/sin values."""
    one, zero = 1.0, 0.0
    if axis == 0:
        m = [[one, zero, zero], [zero, c, -s], [zero, s, c]]
    elif axis == 1:
        m = [[c, zero, s], [zero, one, zero], [-s, zero, c]]
    else:
        m = [[c, -s, zero], [s, c, zero], [zero, zero, one]]
    if _is_md(c):
        return m
    return np.array(m, dtype=float)


def rot_x(angle):
    """Rotation about x; numpy array for floats, nested lists for jets."""
    return _rot(cos(angle), sin(angle), 0)


def rot_y(angle):
    return _rot(cos(angle), sin(angle), 1)


def rot_z(angle):
    return _rot(cos(angle), sin(angle), 2)


@dataclass(frozen=True)
class Pose:
    """Rotation matrix and translation vector; validated on construction."""

    rotation: np.ndarray
    translation: np.ndarray
    _tol: float = field(default=1e-9, repr=False)

    def __post_init__(self):
        r = np.asarray(self.rotation, dtype=float)
        t = np.asarray(self.translation, dtype=float).reshape(3)
        if r.shape != (3, 3):
            raise ValueError("rotation must be 3x3")
        if not np.allclose(r @ r.T, np.eye(3), atol=self._tol):
            raise ValueError("rotation matrix is not orthogonal")
        if not np.isclose(np.linalg.det(r), 1.0, atol=self._tol):
            raise ValueError("rotation matrix determinant is not +1")
        object.__setattr__(self, "rotation", r)
        object.__setattr__(self, "translation", t)

    def transform(self, p: Sequence) -> np.ndarray:
        return self.rotation @ np.asarray(p, dtype=float) + self.translation

    def compose(self, other: "Pose") -> "Pose":
        return Pose(self.rotation @ other.rotation,
                    self.rotation @ other.translation + self.translation)

    def inverse(self) -> "Pose":
        rt = self.rotation.T
        return Pose(rt, -rt @ self.translation)


@dataclass(frozen=True)
class MultiDualPose:
    """Pose whose matrix and vector entries are MultiDual jets."""

    rotation: list  # 3x3 nested lists of MultiDual
    translation: list  # 3 MultiDual

    @property
    def order(self) -> int:
        return self.translation[0].order

    def rotation_order_slice(self, k: int) -> np.ndarray:
        """d^k R / dt^k as a float matrix."""
        return np.array([[e.derivative(k) for e in row]
                         for row in self.rotation])

    def translation_order_slice(self, k: int) -> np.ndarray:
        return np.array([e.derivative(k) for e in self.translation])


def higher_order_field(r_derivs: Sequence[np.ndarray],
                       t_derivs: Sequence[np.ndarray],
                       n: int) -> tuple[np.ndarray, np.ndarray]:
    """Order-n field (K_n, v_n) from per-order pose derivatives.

    r_derivs[k] is d^k R/dt^k and t_derivs[k] is d^k r/dt^k; both lists
    must reach index n.
    """
    if n < 1 or n >= len(r_derivs) or n >= len(t_derivs):
        raise ValueError("derivative stacks too short for requested order")
    r0 = np.asarray(r_derivs[0], dtype=float)
    kn = np.asarray(r_derivs[n], dtype=float) @ r0.T
    vn = np.asarray(t_derivs[n], dtype=float) - kn @ np.asarray(
        t_derivs[0], dtype=float)
    return kn, vn


def md_higher_order_field(pose: MultiDualPose) -> tuple[list, list]:
    """Multidual field pair (K_hat, v_hat) of a multidual pose.

    K_hat = R_hat R(0)^T and v_hat = r_hat - K_hat r(0); the order-k jet
    coefficients of the returned entries are K_k / k! and v_k / k!, with
    K_0 = I and v_0 = 0.
    """
    r0 = pose.rotation_order_slice(0)
    t0 = pose.translation_order_slice(0)
    khat = [[sum(pose.rotation[i][m] * r0[j, m] for m in range(3))
             for j in range(3)] for i in range(3)]
    vhat = [pose.translation[i]
            - sum(khat[i][j] * t0[j] for j in range(3)) for i in range(3)]
    return khat, vhat


def field_order_slice(khat: list, vhat: list, k: int) -> tuple[np.ndarray,
                                                               np.ndarray]:
    """Extract (K_k, v_k) from a multidual field pair."""
    kn = np.array([[e.derivative(k) for e in row] for row in khat])
    vn = np.array([e.derivative(k) for e in vhat])
    return kn, vn
