"""Rigid-body and axis-parametrization primitives.

Conventions used throughout the package:

- Vectors are numpy arrays of shape (3,) or batches of shape (N, 3).
- Rotation matrices R map sensor-frame vectors into the global frame
  (v_global = R @ v_sensor); batches have shape (N, 3, 3).
- All angles are in radians; degrees appear only at reporting boundaries.
- A unit axis j is parametrized by spherical coordinates (theta, phi) as
  j = (cos(theta)cos(phi), cos(theta)sin(phi), sin(theta)).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

UNIT_NORM_TOL = 1e-6


def wrap_angle(phi):
    """Wrap an angle (scalar or array) into (-pi, pi]."""
    wrapped = np.remainder(np.asarray(phi, dtype=float) + np.pi, 2.0 * np.pi) - np.pi
    wrapped = np.where(wrapped == -np.pi, np.pi, wrapped)
    return float(wrapped) if np.ndim(phi) == 0 else wrapped


def skew(v: np.ndarray) -> np.ndarray:
    """Skew-symmetric matrix [v]_x with [v]_x @ w == cross(v, w).

    Accepts (3,) or (N, 3); returns (3, 3) or (N, 3, 3).
    """
    v = np.asarray(v, dtype=float)
    batch = np.atleast_2d(v)
    zeros = np.zeros(batch.shape[0])
    rows = np.stack(
        [
            np.stack([zeros, -batch[:, 2], batch[:, 1]], axis=-1),
            np.stack([batch[:, 2], zeros, -batch[:, 0]], axis=-1),
            np.stack([-batch[:, 1], batch[:, 0], zeros], axis=-1),
        ],
        axis=-2,
    )
    return rows[0] if v.ndim == 1 else rows


def rotational_acc_matrix(omega: np.ndarray, omega_dot: np.ndarray) -> np.ndarray:
    """Matrix K(omega, omega_dot) mapping a lever arm to its rotational acceleration.

    K @ r equals cross(omega, cross(omega, r)) + cross(omega_dot, r) for
    every r. Accepts (3,)/(3,) or (N, 3)/(N, 3) inputs.
    """
    omega = np.asarray(omega, dtype=float)
    w = np.atleast_2d(omega)
    dw = np.atleast_2d(np.asarray(omega_dot, dtype=float))
    wx, wy, wz = w[:, 0], w[:, 1], w[:, 2]
    dwx, dwy, dwz = dw[:, 0], dw[:, 1], dw[:, 2]
    k = np.stack(
        [
            np.stack([-wy * wy - wz * wz, wx * wy - dwz, wx * wz + dwy], axis=-1),
            np.stack([wx * wy + dwz, -wx * wx - wz * wz, wy * wz - dwx], axis=-1),
            np.stack([wx * wz - dwy, wy * wz + dwx, -wx * wx - wy * wy], axis=-1),
        ],
        axis=-2,
    )
    return k[0] if omega.ndim == 1 else k


def spherical_to_axis(theta, phi) -> np.ndarray:
    """Unit vector for spherical coordinates; supports scalar or array angles."""
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    ct = np.cos(theta)
    j = np.stack([ct * np.cos(phi), ct * np.sin(phi), np.sin(theta)], axis=-1)
    return j


def axis_to_spherical(j: np.ndarray) -> tuple[float, float]:
    """Inverse of spherical_to_axis for a single unit vector.

    Returns (theta, phi) with theta in [-pi/2, pi/2] and phi in (-pi, pi];
    phi is 0 by convention at the poles. Raises ValueError when the input
    norm deviates from 1 by more than 1e-6.
    """
    j = np.asarray(j, dtype=float)
    norm = float(np.linalg.norm(j))
    if abs(norm - 1.0) > UNIT_NORM_TOL:
        raise ValueError(f"axis must be a unit vector, got norm {norm:.9g}")
    theta = float(np.arcsin(np.clip(j[2] / norm, -1.0, 1.0)))
    if j[0] * j[0] + j[1] * j[1] == 0.0:
        phi = 0.0
    else:
        phi = wrap_angle(float(np.arctan2(j[1], j[0])))
    return theta, phi


def spherical_jacobian(theta, phi) -> np.ndarray:
    """Partial derivatives of the axis w.r.t. (theta, phi).

    Returns shape (2, 3) (or (N, 2, 3) for array angles): row 0 is
    d j / d theta, row 1 is d j / d phi.
    """
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    st, ct = np.sin(theta), np.cos(theta)
    sp, cp = np.sin(phi), np.cos(phi)
    zeros = np.zeros_like(st)
    jac = np.stack(
        [
            np.stack([-st * cp, -st * sp, ct], axis=-1),
            np.stack([-ct * sp, ct * cp, zeros], axis=-1),
        ],
        axis=-2,
    )
    return jac


def perp_angular_speed(omega: np.ndarray, j: np.ndarray):
    """Magnitude of the angular-velocity component perpendicular to axis j.

    Computed as ||omega x j||; equals ||omega - (j.omega) j|| for unit j.
    Accepts (3,) or (N, 3) omega.
    """
    omega = np.asarray(omega, dtype=float)
    c = np.cross(omega, np.asarray(j, dtype=float))
    return np.linalg.norm(c, axis=-1)


def rotation_about_axis(axis: np.ndarray, angle) -> np.ndarray:
    """Rodrigues rotation matrix about a unit axis; angle may be an array."""
    axis = np.asarray(axis, dtype=float)
    angle = np.asarray(angle, dtype=float)
    s = np.sin(angle)
    c = np.cos(angle)
    k = skew(axis)
    kk = k @ k
    eye = np.eye(3)
    if angle.ndim == 0:
        return eye + s * k + (1.0 - c) * kk
    return eye + s[:, None, None] * k + (1.0 - c)[:, None, None] * kk


def rotation_between(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Minimal rotation R with R @ a == b for unit vectors a, b.

    For antipodal inputs the rotation axis is chosen deterministically
    (perpendicular to a, built from the smallest-magnitude component).
    """
    a = np.asarray(a, dtype=float) / np.linalg.norm(a)
    b = np.asarray(b, dtype=float) / np.linalg.norm(b)
    c = np.cross(a, b)
    d = float(np.dot(a, b))
    s = float(np.linalg.norm(c))
    if s < 1e-12:
        if d > 0.0:
            return np.eye(3)
        helper = np.zeros(3)
        helper[int(np.argmin(np.abs(a)))] = 1.0
        axis = np.cross(a, helper)
        axis /= np.linalg.norm(axis)
        return rotation_about_axis(axis, np.pi)
    axis = c / s
    return rotation_about_axis(axis, float(np.arctan2(s, d)))


@dataclass(frozen=True)
class AxisPair:
    """Unit joint-axis vectors expressed in the two sensor frames."""

    j1: np.ndarray
    j2: np.ndarray

    def __post_init__(self):
        for name in ("j1", "j2"):
            v = np.asarray(getattr(self, name), dtype=float).reshape(3)
            norm = float(np.linalg.norm(v))
            if not np.isfinite(norm) or abs(norm - 1.0) > UNIT_NORM_TOL:
                raise ValueError(f"{name} must be a unit vector, got norm {norm:.9g}")
            object.__setattr__(self, name, v / norm)

    def negated(self) -> "AxisPair":
        return AxisPair(-self.j1, -self.j2)


@dataclass(frozen=True)
class AxisParams:
    """Spherical parameter vector x = (theta1, phi1, theta2, phi2)."""

    theta1: float
    phi1: float
    theta2: float
    phi2: float

    @classmethod
    def from_array(cls, x: np.ndarray) -> "AxisParams":
        x = np.asarray(x, dtype=float).reshape(4)
        return cls(float(x[0]), float(x[1]), float(x[2]), float(x[3]))

    @classmethod
    def from_axes(cls, j1: np.ndarray, j2: np.ndarray) -> "AxisParams":
        t1, p1 = axis_to_spherical(j1)
        t2, p2 = axis_to_spherical(j2)
        return cls(t1, p1, t2, p2)

    def to_array(self) -> np.ndarray:
        return np.array([self.theta1, self.phi1, self.theta2, self.phi2])

    @property
    def j1(self) -> np.ndarray:
        return spherical_to_axis(self.theta1, self.phi1)

    @property
    def j2(self) -> np.ndarray:
        return spherical_to_axis(self.theta2, self.phi2)

    def axis_pair(self) -> AxisPair:
        return AxisPair(self.j1, self.j2)

    def wrapped(self) -> "AxisParams":
        """Canonical representative: theta in [-pi/2, pi/2], phi in (-pi, pi]."""
        x = self.to_array()
        for i in (0, 2):
            theta = wrap_angle(x[i])
            if theta > np.pi / 2:
                theta = np.pi - theta
                x[i + 1] += np.pi
            elif theta < -np.pi / 2:
                theta = -np.pi - theta
                x[i + 1] += np.pi
            x[i] = theta
            x[i + 1] = wrap_angle(x[i + 1])
        return AxisParams.from_array(x)
