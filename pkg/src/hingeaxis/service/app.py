"""FastAPI service exposing simulation, calibration, estimation and evaluation."""

from __future__ import annotations

import numpy as np
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..calibration import (
    SensorCalibration,
    apply_calibration,
    calibrate_from_stationary,
)
from ..errors import ConfigurationError, DataError
from ..evaluation import run_evaluation
from ..kinematics import AxisPair
from ..recording import RecordingPair, moving_average, recording_from_csv, recording_to_csv
from ..residuals import REFERENCE_NOISE, NoiseModel, base_weight
from ..simulator import HingeScenario, motion_summary, simulate
from ..solver import SolverConfig, estimate_axes_multistart
from . import schemas


def _scenario_from_schema(s: schemas.ScenarioSchema) -> HingeScenario:
    kwargs = dict(
        axis_mode=s.axis_mode,
        speed_profile=s.speed_profile,
        duration=s.duration,
        sample_rate=s.sample_rate,
        gravity=np.asarray(s.gravity),
        gyro_bias1=np.asarray(s.gyro_bias1),
        gyro_bias2=np.asarray(s.gyro_bias2),
        stationary_preamble=s.stationary_preamble,
        seed=s.seed,
    )
    if s.j1_true is not None:
        kwargs["j1_true"] = np.asarray(s.j1_true)
    if s.j2_true is not None:
        kwargs["j2_true"] = np.asarray(s.j2_true)
    if s.r1 is not None:
        kwargs["r1"] = np.asarray(s.r1)
    if s.r2 is not None:
        kwargs["r2"] = np.asarray(s.r2)
    if s.center_amplitude is not None:
        kwargs["center_amplitude"] = np.asarray(s.center_amplitude)
    if s.noise is not None:
        kwargs["noise"] = NoiseModel(s.noise.sigma_gyro, s.noise.sigma_acc)
    return HingeScenario(**kwargs)


def _calibration_from_schema(s: schemas.SensorCalibrationSchema) -> SensorCalibration:
    return SensorCalibration(
        gyro_bias=np.asarray(s.gyro_bias),
        acc_gain=s.acc_gain,
        sigma_gyro=s.sigma_gyro,
        sigma_acc=s.sigma_acc,
    )


def _solver_from_schema(s: schemas.SolverConfigSchema | None) -> SolverConfig:
    if s is None:
        return SolverConfig()
    return SolverConfig(**s.model_dump())


def _drop_stationary(recording: RecordingPair, start: int, stop: int) -> RecordingPair:
    """Remove a stationary range; it must touch the recording boundary."""
    if start == 0:
        remaining = recording.window(stop, len(recording))
    elif stop == len(recording):
        remaining = recording.window(0, start)
    else:
        raise ConfigurationError(
            "the stationary range must be a prefix or suffix of the recording"
        )
    if len(remaining) == 0:
        raise DataError("no motion data remains outside the stationary range")
    return remaining


def _prepare_recording(
    csv_text: str,
    smooth_window: int,
    stationary: schemas.StationaryRange | None,
    calibration: schemas.CalibrationPairSchema | None,
    noise_schema: schemas.NoiseModelSchema | None,
    gravity: float,
) -> tuple[RecordingPair, NoiseModel]:
    """Parse, optionally calibrate, and pick the weighting noise model.

    Noise priority: explicit request value, then the stationary segment
    (or provided calibration), then the reference sensor model.
    """
    recording = recording_from_csv(csv_text)
    if smooth_window > 1:
        recording = moving_average(recording, smooth_window)

    noise = None
    if noise_schema is not None:
        noise = NoiseModel(noise_schema.sigma_gyro, noise_schema.sigma_acc)

    if stationary is not None:
        cal1, cal2 = calibrate_from_stationary(
            recording, stationary.start, stationary.stop, g=gravity
        )
        start, stop = recording.time_range_indices(stationary.start, stationary.stop)
        recording = _drop_stationary(recording, start, stop)
        recording = apply_calibration(recording, cal1, cal2)
        if noise is None:
            noise = NoiseModel(cal1.sigma_gyro, cal1.sigma_acc)
    elif calibration is not None:
        cal1 = _calibration_from_schema(calibration.sensor1)
        cal2 = _calibration_from_schema(calibration.sensor2)
        recording = apply_calibration(recording, cal1, cal2)
        if noise is None:
            noise = NoiseModel(cal1.sigma_gyro, cal1.sigma_acc)

    return recording, (noise if noise is not None else REFERENCE_NOISE)


def create_app() -> FastAPI:
    app = FastAPI(title="hingeaxis", version=__version__)

    @app.exception_handler(DataError)
    async def _data_error(request: Request, exc: DataError):
        return JSONResponse(status_code=422, content={"detail": str(exc), "kind": "data"})

    @app.exception_handler(ConfigurationError)
    async def _config_error(request: Request, exc: ConfigurationError):
        return JSONResponse(status_code=400, content={"detail": str(exc), "kind": "config"})

    @app.exception_handler(ValueError)
    async def _value_error(request: Request, exc: ValueError):
        return JSONResponse(status_code=400, content={"detail": str(exc), "kind": "config"})

    @app.get("/health", response_model=schemas.HealthResponse)
    def health():
        return schemas.HealthResponse(status="ok", version=__version__)

    @app.post("/simulate", response_model=schemas.SimulateResponse)
    def simulate_endpoint(req: schemas.SimulateRequest):
        scenario = _scenario_from_schema(req.scenario)
        recording, truth = simulate(scenario)
        summary = motion_summary(truth)
        return schemas.SimulateResponse(
            recording_csv=recording_to_csv(recording),
            ground_truth=truth.to_sidecar(),
            summary=schemas.MotionSummarySchema(**vars(summary)),
        )

    @app.post("/calibrate", response_model=schemas.CalibrateResponse)
    def calibrate_endpoint(req: schemas.CalibrateRequest):
        recording = recording_from_csv(req.recording_csv)
        cal1, cal2 = calibrate_from_stationary(
            recording, req.stationary.start, req.stationary.stop, g=req.gravity
        )
        noise = NoiseModel(cal1.sigma_gyro, cal1.sigma_acc)
        return schemas.CalibrateResponse(
            sensor1=schemas.SensorCalibrationSchema(
                gyro_bias=tuple(cal1.gyro_bias),
                acc_gain=cal1.acc_gain,
                sigma_gyro=cal1.sigma_gyro,
                sigma_acc=cal1.sigma_acc,
            ),
            sensor2=schemas.SensorCalibrationSchema(
                gyro_bias=tuple(cal2.gyro_bias),
                acc_gain=cal2.acc_gain,
                sigma_gyro=cal2.sigma_gyro,
                sigma_acc=cal2.sigma_acc,
            ),
            base_weight=base_weight(noise),
        )

    @app.post("/estimate", response_model=schemas.EstimateResponse)
    def estimate_endpoint(req: schemas.EstimateRequest):
        recording, noise = _prepare_recording(
            req.recording_csv,
            req.smooth_window,
            req.stationary,
            req.calibration,
            req.noise,
            req.gravity,
        )
        from ..evaluation import weights_for_method

        weights = weights_for_method(req.method, noise)
        result = estimate_axes_multistart(
            recording,
            weights,
            _solver_from_schema(req.solver),
            n_starts=req.n_starts,
            seed=req.seed,
        )
        p = result.params
        return schemas.EstimateResponse(
            method=req.method,
            j1=tuple(result.axes.j1),
            j2=tuple(result.axes.j2),
            theta1=p.theta1,
            phi1=p.phi1,
            theta2=p.theta2,
            phi2=p.phi2,
            final_cost=result.final_cost,
            iterations=result.iterations,
            converged=result.converged,
            diagnostic=result.diagnostic,
            trace=[
                schemas.TraceEntrySchema(iteration=i, cost=c, step_norm=s)
                for (i, c, s) in result.trace
            ],
            n_starts=req.n_starts,
            seed=req.seed,
            base_weight=base_weight(noise),
        )

    @app.post("/evaluate", response_model=schemas.EvaluateResponse)
    def evaluate_endpoint(req: schemas.EvaluateRequest):
        recording, noise = _prepare_recording(
            req.recording_csv,
            req.smooth_window,
            req.stationary,
            req.calibration,
            req.noise,
            req.gravity,
        )
        if req.ground_truth is not None:
            for key in ("j1", "j2"):
                if key not in req.ground_truth:
                    raise DataError(f"ground truth payload missing '{key}'")
            reference = AxisPair(
                np.asarray(req.ground_truth["j1"]), np.asarray(req.ground_truth["j2"])
            )
        elif req.reference_j1 is not None and req.reference_j2 is not None:
            reference = AxisPair(np.asarray(req.reference_j1), np.asarray(req.reference_j2))
        else:
            raise ConfigurationError(
                "evaluation needs reference axes: provide ground_truth or "
                "reference_j1/reference_j2"
            )
        report = run_evaluation(
            recording,
            req.methods,
            req.segments,
            req.window,
            reference,
            noise,
            seed=req.seed,
            solver_config=_solver_from_schema(req.solver),
        )
        payload = report.to_dict()
        return schemas.EvaluateResponse(
            segments=payload["segments"],
            window=payload["window"],
            seed=payload["seed"],
            reference_j1=tuple(payload["reference_j1"]),
            reference_j2=tuple(payload["reference_j2"]),
            methods=[schemas.MethodReportSchema(**m) for m in payload["methods"]],
            estimates=[schemas.SegmentEstimateSchema(**e) for e in payload["estimates"]],
            metrics_csv=report.metrics_csv(),
            segment_errors_csv=report.segment_errors_csv(),
        )

    return app


app = create_app()
