"""Multi-method evaluation protocol: segmentation, AD/MAD/SAD, sign pairing.

A recording is split into M evenly spread windows of N consecutive
samples. Each window is solved once per method from a shared random
initial estimate. Estimates are sign-resolved against a reference axis
(both axes flipped together, preserving the sign pairing), then
consistency (MAD/SAD over all estimate pairs) and angular error against
the reference axes are reported per method and axis.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import ConfigurationError
from .kinematics import AxisPair
from .recording import RecordingPair
from .residuals import NoiseModel, ResidualWeights
from .solver import SolverConfig, estimate_axes, random_initialization


class Method(str, Enum):
    GYRO_ONLY = "gyro_only"
    ACC_ONLY = "acc_only"
    COMBINED_UNWEIGHTED = "combined_unweighted"
    COMBINED_WEIGHTED = "combined_weighted"


ALL_METHODS = (
    Method.GYRO_ONLY,
    Method.ACC_ONLY,
    Method.COMBINED_UNWEIGHTED,
    Method.COMBINED_WEIGHTED,
)


def weights_for_method(method: Method | str, noise: NoiseModel) -> ResidualWeights:
    method = Method(method)
    if method is Method.GYRO_ONLY:
        return ResidualWeights.gyro_only()
    if method is Method.ACC_ONLY:
        return ResidualWeights.acc_only()
    if method is Method.COMBINED_UNWEIGHTED:
        return ResidualWeights.unweighted()
    return ResidualWeights.from_noise(noise)


def angular_deviation(ja: np.ndarray, jb: np.ndarray) -> float:
    """Angle between two unit axis vectors, in degrees (0 to 180)."""
    ja = np.asarray(ja, dtype=float)
    jb = np.asarray(jb, dtype=float)
    for name, v in (("first", ja), ("second", jb)):
        norm = float(np.linalg.norm(v))
        if abs(norm - 1.0) > 1e-6:
            raise ValueError(f"{name} axis must be a unit vector, got norm {norm:.9g}")
    return float(np.degrees(np.arccos(np.clip(np.dot(ja, jb), -1.0, 1.0))))


def pairwise_angular_deviations(estimates: np.ndarray) -> np.ndarray:
    """ADs of all unordered estimate pairs, in the order (m, n) with n < m."""
    estimates = np.asarray(estimates, dtype=float)
    m = estimates.shape[0]
    out = []
    for i in range(m):
        for n in range(i):
            out.append(angular_deviation(estimates[i], estimates[n]))
    return np.asarray(out)


def mad_sad(estimates: np.ndarray) -> tuple[float, float]:
    """Mean and sample standard deviation of all pairwise ADs, in degrees.

    SAD of a single pair is 0 by convention (the unbiased divisor would
    be zero).
    """
    estimates = np.asarray(estimates, dtype=float)
    if estimates.shape[0] < 2:
        raise ValueError("need at least 2 estimates for MAD/SAD")
    devs = pairwise_angular_deviations(estimates)
    mad = float(np.mean(devs))
    sad = 0.0 if devs.size < 2 else float(np.std(devs, ddof=1))
    return mad, sad


def resolve_sign(est: AxisPair, reference_j1: np.ndarray) -> AxisPair:
    """Flip the whole pair (never one axis) so AD(j1, reference) <= 90 deg."""
    reference_j1 = np.asarray(reference_j1, dtype=float)
    if float(np.dot(est.j1, reference_j1)) < 0.0:
        return est.negated()
    return est


def segment_dataset(recording: RecordingPair, m: int, n: int) -> list[RecordingPair]:
    """M windows of N consecutive samples, spread evenly over the recording."""
    if m < 1:
        raise ValueError("need at least one segment")
    total = len(recording)
    if total < n:
        raise ValueError(f"recording has {total} samples, shorter than window {n}")
    span = total - n
    if m == 1:
        starts = [0]
    else:
        starts = [int(np.floor(i * span / (m - 1))) for i in range(m)]
    if span < m - 1:
        warnings.warn(
            f"recording supports only {span + 1} distinct window starts for "
            f"{m} segments; windows overlap heavily",
            stacklevel=2,
        )
    return [recording.window(s, s + n) for s in starts]


@dataclass(frozen=True)
class SegmentEstimate:
    segment: int
    start_index: int
    method: str
    j1: np.ndarray
    j2: np.ndarray
    cost: float
    converged: bool
    error_j1_deg: float
    error_j2_deg: float


@dataclass(frozen=True)
class AxisMetrics:
    mad_deg: float
    sad_deg: float
    mean_error_deg: float
    std_error_deg: float


@dataclass(frozen=True)
class MethodReport:
    method: str
    j1: AxisMetrics
    j2: AxisMetrics
    converged_segments: int


@dataclass
class EvaluationReport:
    segments: int
    window: int
    seed: int
    reference: AxisPair
    methods: list[MethodReport] = field(default_factory=list)
    estimates: list[SegmentEstimate] = field(default_factory=list)

    def method_report(self, method: Method | str) -> MethodReport:
        name = Method(method).value
        for report in self.methods:
            if report.method == name:
                return report
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "segments": self.segments,
            "window": self.window,
            "seed": self.seed,
            "reference_j1": [float(v) for v in self.reference.j1],
            "reference_j2": [float(v) for v in self.reference.j2],
            "methods": [
                {
                    "method": r.method,
                    "converged_segments": r.converged_segments,
                    "j1": vars(r.j1).copy(),
                    "j2": vars(r.j2).copy(),
                }
                for r in self.methods
            ],
            "estimates": [
                {
                    "segment": e.segment,
                    "start_index": e.start_index,
                    "method": e.method,
                    "j1": [float(v) for v in e.j1],
                    "j2": [float(v) for v in e.j2],
                    "cost": e.cost,
                    "converged": e.converged,
                    "error_j1_deg": e.error_j1_deg,
                    "error_j2_deg": e.error_j2_deg,
                }
                for e in self.estimates
            ],
        }

    def metrics_csv(self) -> str:
        """Flat per-method, per-axis metrics (full precision)."""
        rows = ["method,axis,mad_deg,sad_deg,mean_error_deg,std_error_deg"]
        for r in self.methods:
            for axis, metrics in (("j1", r.j1), ("j2", r.j2)):
                rows.append(
                    f"{r.method},{axis},{metrics.mad_deg!r},{metrics.sad_deg!r},"
                    f"{metrics.mean_error_deg!r},{metrics.std_error_deg!r}"
                )
        return "\n".join(rows) + "\n"

    def segment_errors_csv(self) -> str:
        """Per-segment angular errors, one row per segment and method."""
        rows = ["segment,start_index,method,error_j1_deg,error_j2_deg,cost,converged"]
        for e in self.estimates:
            rows.append(
                f"{e.segment},{e.start_index},{e.method},{e.error_j1_deg!r},"
                f"{e.error_j2_deg!r},{e.cost!r},{int(e.converged)}"
            )
        return "\n".join(rows) + "\n"


def run_evaluation(
    recording: RecordingPair,
    methods,
    m: int,
    n: int,
    reference: AxisPair,
    noise: NoiseModel,
    seed: int = 0,
    solver_config: SolverConfig | None = None,
) -> EvaluationReport:
    """Evaluate the given methods over M windows of N samples.

    Each window draws one uniform-random initial estimate, shared by all
    methods. Non-converged solves are recorded as-is and flagged; the
    metrics are computed over all segments.
    """
    methods = [Method(x) for x in methods]
    if not methods:
        raise ConfigurationError("no methods selected")
    windows = segment_dataset(recording, m, n)
    starts = [int(np.searchsorted(recording.t, w.t[0])) for w in windows]
    rng = np.random.default_rng(seed)
    initials = [random_initialization(rng) for _ in windows]

    report = EvaluationReport(segments=m, window=n, seed=seed, reference=reference)
    per_method: dict[Method, list[SegmentEstimate]] = {meth: [] for meth in methods}
    for meth in methods:
        weights = weights_for_method(meth, noise)
        for idx, (window, x0) in enumerate(zip(windows, initials)):
            result = estimate_axes(window, weights, solver_config, x0)
            resolved = resolve_sign(result.axes, reference.j1)
            est = SegmentEstimate(
                segment=idx,
                start_index=starts[idx],
                method=meth.value,
                j1=resolved.j1,
                j2=resolved.j2,
                cost=result.final_cost,
                converged=result.converged,
                error_j1_deg=angular_deviation(resolved.j1, reference.j1),
                error_j2_deg=angular_deviation(resolved.j2, reference.j2),
            )
            per_method[meth].append(est)
            report.estimates.append(est)

    for meth in methods:
        ests = per_method[meth]
        j1_stack = np.array([e.j1 for e in ests])
        j2_stack = np.array([e.j2 for e in ests])
        if len(ests) >= 2:
            mad1, sad1 = mad_sad(j1_stack)
            mad2, sad2 = mad_sad(j2_stack)
        else:
            mad1 = sad1 = mad2 = sad2 = 0.0
        err1 = np.array([e.error_j1_deg for e in ests])
        err2 = np.array([e.error_j2_deg for e in ests])
        report.methods.append(
            MethodReport(
                method=meth.value,
                j1=AxisMetrics(
                    mad_deg=mad1,
                    sad_deg=sad1,
                    mean_error_deg=float(np.mean(err1)),
                    std_error_deg=float(np.std(err1, ddof=1)) if err1.size > 1 else 0.0,
                ),
                j2=AxisMetrics(
                    mad_deg=mad2,
                    sad_deg=sad2,
                    mean_error_deg=float(np.mean(err2)),
                    std_error_deg=float(np.std(err2, ddof=1)) if err2.size > 1 else 0.0,
                ),
                converged_segments=sum(1 for e in ests if e.converged),
            )
        )
    return report
