"""Per-sensor calibration from a stationary data segment.

Estimates a constant gyroscope bias (sample mean), a scalar accelerometer
gain matching the mean magnitude to gravity, and the worst-case noise
standard deviations used for residual weighting.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, ImplausibleStationaryDataError, NotStationaryError
from .recording import RecordingPair

STANDARD_GRAVITY = 9.81  # m/s^2

# Stationarity validation thresholds.
MAX_STATIONARY_GYRO_STD = 0.05  # rad/s, per axis
MAX_STATIONARY_ACC_NORM_STD = 0.5  # m/s^2, on the magnitude

# Zero-variance inputs are floored here so derived weights stay finite.
MIN_SIGMA = 1e-9

_AXIS_NAMES = ("x", "y", "z")


@dataclass(frozen=True)
class SensorCalibration:
    gyro_bias: np.ndarray  # rad/s
    acc_gain: float  # dimensionless
    sigma_gyro: float  # rad/s
    sigma_acc: float  # m/s^2

    def __post_init__(self):
        object.__setattr__(
            self, "gyro_bias", np.asarray(self.gyro_bias, dtype=float).reshape(3)
        )
        if self.acc_gain <= 0.0:
            raise ConfigurationError("acc_gain must be positive")
        if self.sigma_gyro <= 0.0 or self.sigma_acc <= 0.0:
            raise ConfigurationError("noise sigmas must be positive")

    @classmethod
    def identity(cls) -> "SensorCalibration":
        from .residuals import REFERENCE_NOISE

        return cls(
            gyro_bias=np.zeros(3),
            acc_gain=1.0,
            sigma_gyro=REFERENCE_NOISE.sigma_gyro,
            sigma_acc=REFERENCE_NOISE.sigma_acc,
        )


def estimate_gyro_bias(stationary_gyro: np.ndarray) -> np.ndarray:
    """Gyro bias as the sample mean of stationary angular-rate readings.

    Raises NotStationaryError when any axis shows a standard deviation
    above 0.05 rad/s (the data was moving).
    """
    gyr = np.asarray(stationary_gyro, dtype=float).reshape(-1, 3)
    if gyr.shape[0] < 2:
        raise ValueError("need at least 2 stationary samples")
    std = np.std(gyr, axis=0, ddof=1)
    if np.any(std > MAX_STATIONARY_GYRO_STD):
        axis = _AXIS_NAMES[int(np.argmax(std))]
        raise NotStationaryError(
            f"gyro axis {axis} has std {std.max():.4g} rad/s "
            f"(limit {MAX_STATIONARY_GYRO_STD}); data is not stationary"
        )
    return np.mean(gyr, axis=0)


def estimate_acc_gain(stationary_acc: np.ndarray, g: float = STANDARD_GRAVITY) -> float:
    """Scalar gain that fits stationary accelerometer magnitudes to gravity.

    Least-squares solution of gain * ||a_k|| ~= g:
    gain = g * sum(||a_k||) / sum(||a_k||^2).
    """
    acc = np.asarray(stationary_acc, dtype=float).reshape(-1, 3)
    if acc.shape[0] < 2:
        raise ValueError("need at least 2 stationary samples")
    norms = np.linalg.norm(acc, axis=1)
    if np.any(norms < 0.1 * g):
        raise ImplausibleStationaryDataError(
            f"stationary accelerometer magnitude {norms.min():.4g} m/s^2 is far "
            "below gravity; wrong units or free fall?"
        )
    return g * float(np.sum(norms)) / float(np.sum(norms * norms))


def estimate_noise_std(
    gyr1: np.ndarray, gyr2: np.ndarray, acc1: np.ndarray, acc2: np.ndarray
) -> tuple[float, float]:
    """Worst-case noise stds: sqrt of the max per-axis sample variance.

    The maximum is taken over all six axes of each sensor type. Requires
    at least 30 samples; zero-variance input is floored at 1e-9 with a
    warning.
    """
    gyr = np.hstack([np.asarray(gyr1, float).reshape(-1, 3), np.asarray(gyr2, float).reshape(-1, 3)])
    acc = np.hstack([np.asarray(acc1, float).reshape(-1, 3), np.asarray(acc2, float).reshape(-1, 3)])
    if gyr.shape[0] < 30:
        raise ValueError("need at least 30 stationary samples to estimate noise")
    sigma_gyro = float(np.sqrt(np.max(np.var(gyr, axis=0, ddof=1))))
    sigma_acc = float(np.sqrt(np.max(np.var(acc, axis=0, ddof=1))))
    if sigma_gyro < MIN_SIGMA or sigma_acc < MIN_SIGMA:
        warnings.warn(
            "stationary data has (near) zero variance; noise stds floored at 1e-9",
            stacklevel=2,
        )
        sigma_gyro = max(sigma_gyro, MIN_SIGMA)
        sigma_acc = max(sigma_acc, MIN_SIGMA)
    return sigma_gyro, sigma_acc


def check_stationarity(gyr: np.ndarray, acc: np.ndarray) -> None:
    """Validate that a segment is plausibly motionless."""
    gyr = np.asarray(gyr, dtype=float).reshape(-1, 3)
    acc = np.asarray(acc, dtype=float).reshape(-1, 3)
    std = np.std(gyr, axis=0, ddof=1)
    if np.any(std > MAX_STATIONARY_GYRO_STD):
        axis = _AXIS_NAMES[int(np.argmax(std))]
        raise NotStationaryError(
            f"gyro axis {axis} has std {std.max():.4g} rad/s; segment is not stationary"
        )
    norm_std = float(np.std(np.linalg.norm(acc, axis=1), ddof=1))
    if norm_std > MAX_STATIONARY_ACC_NORM_STD:
        raise NotStationaryError(
            f"accelerometer magnitude std {norm_std:.4g} m/s^2 exceeds "
            f"{MAX_STATIONARY_ACC_NORM_STD}; segment is not stationary"
        )


def calibrate_from_stationary(
    recording: RecordingPair,
    t_start: float | None = None,
    t_stop: float | None = None,
    g: float = STANDARD_GRAVITY,
) -> tuple[SensorCalibration, SensorCalibration]:
    """Calibrate both sensors from a stationary time range of a recording.

    The noise stds are shared between the two returned calibrations (they
    are worst-case values across both sensors).
    """
    start, stop = recording.time_range_indices(t_start, t_stop)
    seg = recording.window(start, stop)
    check_stationarity(seg.gyr1, seg.acc1)
    check_stationarity(seg.gyr2, seg.acc2)
    bias1 = estimate_gyro_bias(seg.gyr1)
    bias2 = estimate_gyro_bias(seg.gyr2)
    gain1 = estimate_acc_gain(seg.acc1, g=g)
    gain2 = estimate_acc_gain(seg.acc2, g=g)
    sigma_gyro, sigma_acc = estimate_noise_std(seg.gyr1, seg.gyr2, seg.acc1, seg.acc2)
    cal1 = SensorCalibration(bias1, gain1, sigma_gyro, sigma_acc)
    cal2 = SensorCalibration(bias2, gain2, sigma_gyro, sigma_acc)
    return cal1, cal2


def apply_calibration(
    recording: RecordingPair, cal1: SensorCalibration, cal2: SensorCalibration
) -> RecordingPair:
    """Subtract gyro biases and scale accelerometer readings."""
    return RecordingPair(
        t=recording.t,
        gyr1=recording.gyr1 - cal1.gyro_bias,
        acc1=recording.acc1 * cal1.acc_gain,
        gyr2=recording.gyr2 - cal2.gyro_bias,
        acc2=recording.acc2 * cal2.acc_gain,
        sample_rate=recording.sample_rate,
        metadata=dict(recording.metadata),
    )
