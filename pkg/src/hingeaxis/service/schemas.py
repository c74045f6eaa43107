"""Pydantic request/response models of the estimation service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

Vec3 = tuple[float, float, float]

MethodName = Literal["gyro_only", "acc_only", "combined_unweighted", "combined_weighted"]


class NoiseModelSchema(BaseModel):
    sigma_gyro: float = Field(gt=0)
    sigma_acc: float = Field(gt=0)


class ScenarioSchema(BaseModel):
    axis_mode: Literal["free", "vertical", "horizontal"] = "free"
    speed_profile: Literal["fast", "slow", "mixed"] = "fast"
    duration: float = Field(default=60.0, gt=0)
    sample_rate: float = Field(default=100.0, gt=0)
    j1_true: Optional[Vec3] = None
    j2_true: Optional[Vec3] = None
    r1: Optional[Vec3] = None
    r2: Optional[Vec3] = None
    gravity: Vec3 = (0.0, 0.0, -9.81)
    noise: Optional[NoiseModelSchema] = None
    gyro_bias1: Vec3 = (0.0, 0.0, 0.0)
    gyro_bias2: Vec3 = (0.0, 0.0, 0.0)
    center_amplitude: Optional[Vec3] = None
    stationary_preamble: float = Field(default=0.0, ge=0)
    seed: int = 0


class MotionSummarySchema(BaseModel):
    samples: int
    duration: float
    sample_rate: float
    max_angular_rate: float
    mean_angular_rate: float
    std_angular_rate: float
    axis_mode: str
    speed_profile: str


class SimulateRequest(BaseModel):
    scenario: ScenarioSchema


class SimulateResponse(BaseModel):
    recording_csv: str
    ground_truth: dict
    summary: MotionSummarySchema


class StationaryRange(BaseModel):
    start: Optional[float] = None
    stop: Optional[float] = None


class CalibrateRequest(BaseModel):
    recording_csv: str
    stationary: StationaryRange = StationaryRange()
    gravity: float = Field(default=9.81, gt=0)


class SensorCalibrationSchema(BaseModel):
    gyro_bias: Vec3
    acc_gain: float
    sigma_gyro: float
    sigma_acc: float


class CalibrateResponse(BaseModel):
    sensor1: SensorCalibrationSchema
    sensor2: SensorCalibrationSchema
    base_weight: float


class SolverConfigSchema(BaseModel):
    max_iterations: int = Field(default=200, ge=1)
    step_tolerance: float = Field(default=1e-10, gt=0)
    gradient_tolerance: float = Field(default=1e-10, gt=0)
    damping_initial: float = Field(default=0.0, ge=0)
    levenberg_fallback: float = Field(default=1e-6, gt=0)
    damping_increase: float = Field(default=10.0, gt=1)
    damping_decrease: float = Field(default=0.1, gt=0, lt=1)
    max_step_retries: int = Field(default=30, ge=1)


class CalibrationPairSchema(BaseModel):
    sensor1: SensorCalibrationSchema
    sensor2: SensorCalibrationSchema


class EstimateRequest(BaseModel):
    recording_csv: str
    method: MethodName = "combined_weighted"
    noise: Optional[NoiseModelSchema] = None
    calibration: Optional[CalibrationPairSchema] = None
    stationary: Optional[StationaryRange] = None
    solver: Optional[SolverConfigSchema] = None
    n_starts: int = Field(default=8, ge=1)
    seed: int = 0
    smooth_window: int = Field(default=1, ge=1)
    gravity: float = Field(default=9.81, gt=0)


class TraceEntrySchema(BaseModel):
    iteration: int
    cost: float
    step_norm: float


class EstimateResponse(BaseModel):
    method: MethodName
    j1: Vec3
    j2: Vec3
    theta1: float
    phi1: float
    theta2: float
    phi2: float
    final_cost: float
    iterations: int
    converged: bool
    diagnostic: str
    trace: list[TraceEntrySchema]
    n_starts: int
    seed: int
    base_weight: float


class EvaluateRequest(BaseModel):
    recording_csv: str
    methods: list[MethodName] = Field(
        default=["gyro_only", "acc_only", "combined_unweighted", "combined_weighted"]
    )
    segments: int = Field(default=100, ge=1)
    window: int = Field(default=500, ge=4)
    seed: int = 0
    noise: Optional[NoiseModelSchema] = None
    ground_truth: Optional[dict] = None
    reference_j1: Optional[Vec3] = None
    reference_j2: Optional[Vec3] = None
    calibration: Optional[CalibrationPairSchema] = None
    stationary: Optional[StationaryRange] = None
    solver: Optional[SolverConfigSchema] = None
    smooth_window: int = Field(default=1, ge=1)
    gravity: float = Field(default=9.81, gt=0)


class AxisMetricsSchema(BaseModel):
    mad_deg: float
    sad_deg: float
    mean_error_deg: float
    std_error_deg: float


class MethodReportSchema(BaseModel):
    method: MethodName
    converged_segments: int
    j1: AxisMetricsSchema
    j2: AxisMetricsSchema


class SegmentEstimateSchema(BaseModel):
    segment: int
    start_index: int
    method: MethodName
    j1: Vec3
    j2: Vec3
    cost: float
    converged: bool
    error_j1_deg: float
    error_j2_deg: float


class EvaluateResponse(BaseModel):
    segments: int
    window: int
    seed: int
    reference_j1: Vec3
    reference_j2: Vec3
    methods: list[MethodReportSchema]
    estimates: list[SegmentEstimateSchema]
    metrics_csv: str
    segment_errors_csv: str


class HealthResponse(BaseModel):
    status: str
    version: str
