"""Quaternions and dual quaternions, generic over the scalar type.

Components may be plain floats or MultiDual jets; all operations use only
ring arithmetic (and sqrt where noted), so the same classes serve both the
classical and the automatic-differentiation code paths.

Conventions
-----------
A rigid displacement with rotation quaternion q and translation vector t
is the unit dual quaternion

    Q = q + eps0 * (1/2) * t_quat * q,          t_quat = (0, tx, ty, tz),

where eps0**2 == 0 is the dual unit (kept distinct from, and commuting
with, the differentiation nilpotent of MultiDual components).  Unitness
is the Study condition: |x|^2 == 1 and dot(x, y) == 0 for real part x and
dual part y.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .multidual import MultiDual, sqrt as md_sqrt


def _as_float(c):
    return c.real if isinstance(c, MultiDual) else float(c)


@dataclass(frozen=True)
class Quaternion:
    w: object
    x: object
    y: object
    z: object

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def scale(self, s) -> "Quaternion":
        return Quaternion(self.w * s, self.x * s, self.y * s, self.z * s)

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        a, b = self, other
        return Quaternion(
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        )

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def squared_norm(self):
        return (self.w * self.w + self.x * self.x
                + self.y * self.y + self.z * self.z)

    def norm(self):
        return md_sqrt(self.squared_norm())

    def normalized(self) -> "Quaternion":
        return self.scale(1.0 / self.norm())

    def dot(self, other: "Quaternion"):
        return (self.w * other.w + self.x * other.x
                + self.y * other.y + self.z * other.z)

    def components(self) -> tuple:
        return (self.w, self.x, self.y, self.z)

    def vector(self) -> tuple:
        return (self.x, self.y, self.z)

    def real_components(self) -> tuple[float, ...]:
        """Component values with any jet structure stripped."""
        return tuple(_as_float(c) for c in self.components())

    @staticmethod
    def from_vector(v: Sequence) -> "Quaternion":
        return Quaternion(0.0, v[0], v[1], v[2])

    @staticmethod
    def identity() -> "Quaternion":
        return Quaternion(1.0, 0.0, 0.0, 0.0)

    def rotate(self, v: Sequence) -> tuple:
        """Rotate a 3-vector by this (assumed unit) quaternion."""
        p = self * Quaternion.from_vector(v) * self.conjugate()
        return (p.x, p.y, p.z)

    def to_rotation_matrix(self) -> np.ndarray:
        w, x, y, z = self.components()
        n = w * w + x * x + y * y + z * z
        s = 2.0 / n
        return np.array([
            [1 - s * (y * y + z * z), s * (x * y - w * z), s * (x * z + w * y)],
            [s * (x * y + w * z), 1 - s * (x * x + z * z), s * (y * z - w * x)],
            [s * (x * z - w * y), s * (y * z + w * x), 1 - s * (x * x + y * y)],
        ])

    @staticmethod
    def from_rotation_matrix(r: np.ndarray) -> "Quaternion":
        """Unit quaternion of a rotation matrix.

        Picks the best conditioned of the four component ratios before
        normalizing, so the result is stable for any rotation.
        """
        r = np.asarray(r, dtype=float)
        tr = r[0, 0] + r[1, 1] + r[2, 2]
        cands = (1.0 + tr, 1.0 + r[0, 0] - r[1, 1] - r[2, 2],
                 1.0 - r[0, 0] + r[1, 1] - r[2, 2],
                 1.0 - r[0, 0] - r[1, 1] + r[2, 2])
        i = int(np.argmax(cands))
        if i == 0:
            q = (cands[0], r[2, 1] - r[1, 2], r[0, 2] - r[2, 0],
                 r[1, 0] - r[0, 1])
        elif i == 1:
            q = (r[2, 1] - r[1, 2], cands[1], r[0, 1] + r[1, 0],
                 r[2, 0] + r[0, 2])
        elif i == 2:
            q = (r[0, 2] - r[2, 0], r[0, 1] + r[1, 0], cands[2],
                 r[1, 2] + r[2, 1])
        else:
            q = (r[1, 0] - r[0, 1], r[2, 0] + r[0, 2], r[1, 2] + r[2, 1],
                 cands[3])
        return Quaternion(*q).normalized()


@dataclass(frozen=True)
class DualQuaternion:
    """Dual quaternion real + eps0 * dual with eps0**2 == 0."""

    real: Quaternion
    dual: Quaternion

    def __add__(self, other: "DualQuaternion") -> "DualQuaternion":
        return DualQuaternion(self.real + other.real, self.dual + other.dual)

    def __sub__(self, other: "DualQuaternion") -> "DualQuaternion":
        return DualQuaternion(self.real - other.real, self.dual - other.dual)

    def __neg__(self) -> "DualQuaternion":
        return DualQuaternion(-self.real, -self.dual)

    def scale(self, s) -> "DualQuaternion":
        return DualQuaternion(self.real.scale(s), self.dual.scale(s))

    def __mul__(self, other: "DualQuaternion") -> "DualQuaternion":
        return DualQuaternion(
            self.real * other.real,
            self.real * other.dual + self.dual * other.real,
        )

    def conjugate(self) -> "DualQuaternion":
        """Quaternion conjugate of both parts (inverse for unit dq)."""
        return DualQuaternion(self.real.conjugate(), self.dual.conjugate())

    def normalized(self) -> "DualQuaternion":
        n = self.real.norm()
        q = DualQuaternion(self.real.scale(1.0 / n), self.dual.scale(1.0 / n))
        # remove the residual dual-scalar component along the real part
        d = q.real.dot(q.dual)
        return DualQuaternion(q.real, q.dual - q.real.scale(d))

    def study_residuals(self) -> tuple[float, float]:
        """(|x|^2 - 1, dot(x, y)); both vanish for a unit dual quaternion."""
        return (_as_float(self.real.squared_norm()) - 1.0,
                _as_float(self.real.dot(self.dual)))

    def components(self) -> tuple:
        return self.real.components() + self.dual.components()

    def real_components(self) -> tuple[float, ...]:
        return tuple(_as_float(c) for c in self.components())

    @staticmethod
    def identity() -> "DualQuaternion":
        return DualQuaternion(Quaternion.identity(),
                              Quaternion(0.0, 0.0, 0.0, 0.0))

    @staticmethod
    def from_components(c: Sequence) -> "DualQuaternion":
        return DualQuaternion(Quaternion(c[0], c[1], c[2], c[3]),
                              Quaternion(c[4], c[5], c[6], c[7]))

    @staticmethod
    def from_translation(t: Sequence) -> "DualQuaternion":
        return DualQuaternion(Quaternion.identity(),
                              Quaternion(0.0, 0.5 * t[0], 0.5 * t[1],
                                         0.5 * t[2]))

    @staticmethod
    def from_pose(r: np.ndarray, t: Sequence) -> "DualQuaternion":
        q = Quaternion.from_rotation_matrix(r)
        y = Quaternion.from_vector(t).scale(0.5) * q
        return DualQuaternion(q, y)

    def to_pose(self) -> tuple[np.ndarray, np.ndarray]:
        q = DualQuaternion(self.real, self.dual).normalized()
        rot = q.real.to_rotation_matrix()
        tq = q.dual.scale(2.0) * q.real.conjugate()
        return rot, np.array([tq.x, tq.y, tq.z], dtype=float)


def hmd_motion(q_jets: Quaternion, t_jets: Sequence) -> DualQuaternion:
    """Dual quaternion of a moving frame with MultiDual components.

    q_jets is the rotation quaternion with jet components, t_jets the
    translation 3-vector of jets.  The product (1 + eps0/2 t) * q is
    expanded so the k-th jet coefficient of every component carries the
    k-th time derivative of that dual quaternion component (scaled by
    1/k!), i.e. the general Leibniz expansion happens inside the jet
    multiplication.
    """
    y = Quaternion.from_vector(t_jets).scale(0.5) * q_jets
    return DualQuaternion(q_jets, y)


def dq_derivative_stack(hmd: DualQuaternion, order: int = 3) -> list:
    """Per-order dual quaternion derivatives of an HMD dual quaternion.

    Returns [Q, dQ/dt, ..., d^order Q/dt^order] as plain-float dual
    quaternions, extracted from the jet coefficients of the components.
    """
    comps = hmd.components()
    stacks = []
    for k in range(order + 1):
        vals = []
        for c in comps:
            if isinstance(c, MultiDual):
                vals.append(c.derivative(k) if k <= c.order else 0.0)
            else:
                vals.append(float(c) if k == 0 else 0.0)
        stacks.append(DualQuaternion.from_components(vals))
    return stacks
