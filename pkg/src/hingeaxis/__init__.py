"""Hinge joint axis identification from a pair of 6-DOF IMUs."""

from .calibration import (
    SensorCalibration,
    apply_calibration,
    calibrate_from_stationary,
    estimate_acc_gain,
    estimate_gyro_bias,
    estimate_noise_std,
)
from .errors import (
    ConfigurationError,
    DataError,
    HingeAxisError,
    ImplausibleStationaryDataError,
    NotStationaryError,
)
from .evaluation import (
    Method,
    angular_deviation,
    mad_sad,
    resolve_sign,
    run_evaluation,
    segment_dataset,
    weights_for_method,
)
from .kinematics import (
    AxisPair,
    AxisParams,
    axis_to_spherical,
    perp_angular_speed,
    rotational_acc_matrix,
    spherical_to_axis,
)
from .recording import RecordingPair, SamplePair, read_recording_csv, write_recording_csv
from .residuals import (
    REFERENCE_NOISE,
    NoiseModel,
    ResidualWeights,
    acc_residual,
    acc_weight,
    base_weight,
    gyro_residual,
)
from .simulator import (
    GroundTruth,
    HingeScenario,
    motion_summary,
    simulate,
    simulate_stationary,
    speed_profile_angle,
)
from .solver import (
    EstimationResult,
    SolverConfig,
    cost,
    estimate_axes,
    estimate_axes_multistart,
    random_initialization,
)

__version__ = "0.1.0"

__all__ = [
    "AxisPair",
    "AxisParams",
    "ConfigurationError",
    "DataError",
    "EstimationResult",
    "GroundTruth",
    "HingeAxisError",
    "HingeScenario",
    "ImplausibleStationaryDataError",
    "Method",
    "NoiseModel",
    "NotStationaryError",
    "REFERENCE_NOISE",
    "RecordingPair",
    "ResidualWeights",
    "SamplePair",
    "SensorCalibration",
    "SolverConfig",
    "acc_residual",
    "acc_weight",
    "angular_deviation",
    "apply_calibration",
    "axis_to_spherical",
    "base_weight",
    "calibrate_from_stationary",
    "cost",
    "estimate_acc_gain",
    "estimate_axes",
    "estimate_axes_multistart",
    "estimate_gyro_bias",
    "estimate_noise_std",
    "gyro_residual",
    "mad_sad",
    "motion_summary",
    "perp_angular_speed",
    "random_initialization",
    "read_recording_csv",
    "resolve_sign",
    "rotational_acc_matrix",
    "run_evaluation",
    "segment_dataset",
    "simulate",
    "simulate_stationary",
    "speed_profile_angle",
    "spherical_to_axis",
    "weights_for_method",
    "write_recording_csv",
]
