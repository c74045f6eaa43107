"""Weighted kinematic-constraint residuals and their analytic gradients.

Two residuals are formed per sample k for a candidate axis pair
(j1, j2) = (j1(x), j2(x)) with x = (theta1, phi1, theta2, phi2):

    e_gyro(k) = w_gyro * (||gyr1(k) x j1|| - ||gyr2(k) x j2||)
    e_acc(k)  = w_acc(k) * (j1 . acc1(k) - j2 . acc2(k))

Weights follow the variance-matching strategy: a constant gyroscope
weight w0 = sigma_acc / sigma_gyro, and a per-sample accelerometer
weight 1 / sqrt(1 + (||acc1|| - ||acc2||)^2) that discounts samples
whose accelerometer magnitudes disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConfigurationError
from .kinematics import AxisParams, spherical_jacobian
from .recording import SamplePair

# Below this perpendicular angular speed (rad/s) the gyro residual sits at
# its non-differentiable cone point; the affected sensor contributes a zero
# subgradient there.
SINGULAR_RATE_EPS = 1e-9


@dataclass(frozen=True)
class NoiseModel:
    """Worst-case per-sensor-type measurement noise standard deviations."""

    sigma_gyro: float  # rad/s
    sigma_acc: float  # m/s^2

    def __post_init__(self):
        if not (self.sigma_gyro > 0.0 and np.isfinite(self.sigma_gyro)):
            raise ConfigurationError("sigma_gyro must be strictly positive")
        if not (self.sigma_acc > 0.0 and np.isfinite(self.sigma_acc)):
            raise ConfigurationError("sigma_acc must be strictly positive")


#: Noise levels of the reference sensor set used for default weighting.
REFERENCE_NOISE = NoiseModel(sigma_gyro=0.0050, sigma_acc=0.0346)


def base_weight(noise: NoiseModel) -> float:
    """Constant gyro-residual weight w0 = sigma_acc / sigma_gyro."""
    return noise.sigma_acc / noise.sigma_gyro


def acc_weight(acc1: np.ndarray, acc2: np.ndarray):
    """Accelerometer residual weight from the norm difference of the readings.

    Returns sqrt(1 / (1 + (||acc1|| - ||acc2||)^2)), in (0, 1]. Accepts
    (3,) vectors or (N, 3) batches.
    """
    n1 = np.linalg.norm(np.asarray(acc1, dtype=float), axis=-1)
    n2 = np.linalg.norm(np.asarray(acc2, dtype=float), axis=-1)
    d = n1 - n2
    return np.sqrt(1.0 / (1.0 + d * d))


@dataclass(frozen=True)
class ResidualWeights:
    """Weighting rule: constant gyro weight plus a per-sample acc weight."""

    w_gyro: float
    w_acc_fn: Callable[[np.ndarray, np.ndarray], np.ndarray]

    def acc_weights(self, acc1: np.ndarray, acc2: np.ndarray) -> np.ndarray:
        return np.broadcast_to(
            np.asarray(self.w_acc_fn(acc1, acc2), dtype=float),
            np.atleast_2d(acc1).shape[:-1],
        ).copy()

    @classmethod
    def from_noise(cls, noise: NoiseModel) -> "ResidualWeights":
        """The proposed weighting: w_gyro = w0, w_acc from the norm difference."""
        return cls(w_gyro=base_weight(noise), w_acc_fn=acc_weight)

    @classmethod
    def gyro_only(cls) -> "ResidualWeights":
        return cls(w_gyro=1.0, w_acc_fn=lambda a1, a2: np.zeros(np.atleast_2d(a1).shape[0]))

    @classmethod
    def acc_only(cls) -> "ResidualWeights":
        return cls(w_gyro=0.0, w_acc_fn=lambda a1, a2: np.ones(np.atleast_2d(a1).shape[0]))

    @classmethod
    def unweighted(cls) -> "ResidualWeights":
        return cls(w_gyro=1.0, w_acc_fn=lambda a1, a2: np.ones(np.atleast_2d(a1).shape[0]))


def gyro_residuals(
    gyr1: np.ndarray, gyr2: np.ndarray, x: AxisParams, w_gyro: float
) -> np.ndarray:
    """Angular-velocity constraint residuals for a batch of samples."""
    g1 = np.atleast_2d(np.asarray(gyr1, dtype=float))
    g2 = np.atleast_2d(np.asarray(gyr2, dtype=float))
    n1 = np.linalg.norm(np.cross(g1, x.j1), axis=-1)
    n2 = np.linalg.norm(np.cross(g2, x.j2), axis=-1)
    return w_gyro * (n1 - n2)


def acc_residuals(acc1: np.ndarray, acc2: np.ndarray, x: AxisParams, w_acc) -> np.ndarray:
    """Acceleration constraint residuals for a batch of samples."""
    a1 = np.atleast_2d(np.asarray(acc1, dtype=float))
    a2 = np.atleast_2d(np.asarray(acc2, dtype=float))
    return np.asarray(w_acc, dtype=float) * (a1 @ x.j1 - a2 @ x.j2)


def _perp_direction(gyr: np.ndarray, j: np.ndarray) -> np.ndarray:
    """d ||gyr x j|| / d j = ((gyr x j) x gyr) / ||gyr x j||, zero near the cone point."""
    c = np.cross(gyr, j)
    n = np.linalg.norm(c, axis=-1, keepdims=True)
    u = np.cross(c, gyr)
    safe = n > SINGULAR_RATE_EPS
    return np.where(safe, u / np.where(safe, n, 1.0), 0.0)


def gyro_residual_jacobian(
    gyr1: np.ndarray, gyr2: np.ndarray, x: AxisParams, w_gyro: float
) -> np.ndarray:
    """Per-sample gradients of the gyro residual w.r.t. x; shape (N, 4)."""
    g1 = np.atleast_2d(np.asarray(gyr1, dtype=float))
    g2 = np.atleast_2d(np.asarray(gyr2, dtype=float))
    s1 = spherical_jacobian(x.theta1, x.phi1)  # (2, 3)
    s2 = spherical_jacobian(x.theta2, x.phi2)
    u1 = _perp_direction(g1, x.j1)
    u2 = _perp_direction(g2, x.j2)
    jac = np.empty((g1.shape[0], 4))
    jac[:, 0:2] = w_gyro * (u1 @ s1.T)
    jac[:, 2:4] = -w_gyro * (u2 @ s2.T)
    return jac


def acc_residual_jacobian(acc1: np.ndarray, acc2: np.ndarray, x: AxisParams, w_acc) -> np.ndarray:
    """Per-sample gradients of the acc residual w.r.t. x; shape (N, 4)."""
    a1 = np.atleast_2d(np.asarray(acc1, dtype=float))
    a2 = np.atleast_2d(np.asarray(acc2, dtype=float))
    s1 = spherical_jacobian(x.theta1, x.phi1)
    s2 = spherical_jacobian(x.theta2, x.phi2)
    w = np.asarray(w_acc, dtype=float).reshape(-1, 1)
    jac = np.empty((a1.shape[0], 4))
    jac[:, 0:2] = w * (a1 @ s1.T)
    jac[:, 2:4] = -w * (a2 @ s2.T)
    return jac


def gyro_residual(sample: SamplePair, x: AxisParams, w_gyro: float) -> float:
    """Weighted angular-velocity constraint residual of one sample."""
    return float(gyro_residuals(sample.gyr1, sample.gyr2, x, w_gyro)[0])


def acc_residual(sample: SamplePair, x: AxisParams, w_acc: float) -> float:
    """Weighted acceleration constraint residual of one sample."""
    return float(acc_residuals(sample.acc1, sample.acc2, x, w_acc)[0])


def gyro_residual_gradient(sample: SamplePair, x: AxisParams, w_gyro: float) -> np.ndarray:
    return gyro_residual_jacobian(sample.gyr1, sample.gyr2, x, w_gyro)[0]


def acc_residual_gradient(sample: SamplePair, x: AxisParams, w_acc: float) -> np.ndarray:
    return acc_residual_jacobian(sample.acc1, sample.acc2, x, w_acc)[0]
