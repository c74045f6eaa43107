"""Synchronized two-sensor recordings and their on-disk formats.

Recording CSV layout (header required, one row per time step, LF endings):

    t,gyr1_x,gyr1_y,gyr1_z,acc1_x,acc1_y,acc1_z,gyr2_x,gyr2_y,gyr2_z,acc2_x,acc2_y,acc2_z

Units are s, rad/s and m/s^2. The ground-truth sidecar is a JSON object
with keys "j1", "j2", "r1", "r2", "joint_angle" and a "scenario" echo.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import DataError

CSV_HEADER = (
    "t,gyr1_x,gyr1_y,gyr1_z,acc1_x,acc1_y,acc1_z,"
    "gyr2_x,gyr2_y,gyr2_z,acc2_x,acc2_y,acc2_z"
)

JITTER_TOLERANCE = 0.01  # relative deviation of sample spacing before warning


@dataclass(frozen=True)
class SamplePair:
    """One timestamped reading of both sensors."""

    t: float
    gyr1: np.ndarray
    gyr2: np.ndarray
    acc1: np.ndarray
    acc2: np.ndarray


@dataclass
class RecordingPair:
    """Time-ordered synchronized sample streams of sensors 1 and 2."""

    t: np.ndarray
    gyr1: np.ndarray
    acc1: np.ndarray
    gyr2: np.ndarray
    acc2: np.ndarray
    sample_rate: float
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.t = np.asarray(self.t, dtype=float).reshape(-1)
        n = self.t.shape[0]
        for name in ("gyr1", "acc1", "gyr2", "acc2"):
            arr = np.asarray(getattr(self, name), dtype=float)
            if arr.shape != (n, 3):
                raise DataError(f"{name} must have shape ({n}, 3), got {arr.shape}")
            if not np.all(np.isfinite(arr)):
                raise DataError(f"{name} contains non-finite values")
            setattr(self, name, arr)
        if not np.all(np.isfinite(self.t)):
            raise DataError("timestamps contain non-finite values")
        if n >= 2:
            dt = np.diff(self.t)
            if np.any(dt <= 0.0):
                k = int(np.argmax(dt <= 0.0))
                raise DataError(
                    f"timestamps must be strictly increasing (violated at sample {k + 1})"
                )
            mean_dt = float(np.mean(dt))
            if np.max(np.abs(dt - mean_dt)) > JITTER_TOLERANCE * mean_dt:
                warnings.warn(
                    "sample spacing varies by more than 1%; downstream segmentation "
                    "assumes a uniform rate",
                    stacklevel=2,
                )
        if self.sample_rate <= 0.0:
            raise DataError("sample_rate must be positive")

    def __len__(self) -> int:
        return int(self.t.shape[0])

    def sample(self, k: int) -> SamplePair:
        return SamplePair(
            t=float(self.t[k]),
            gyr1=self.gyr1[k],
            gyr2=self.gyr2[k],
            acc1=self.acc1[k],
            acc2=self.acc2[k],
        )

    def window(self, start: int, stop: int) -> "RecordingPair":
        """Contiguous sub-recording over sample indices [start, stop)."""
        return RecordingPair(
            t=self.t[start:stop],
            gyr1=self.gyr1[start:stop],
            acc1=self.acc1[start:stop],
            gyr2=self.gyr2[start:stop],
            acc2=self.acc2[start:stop],
            sample_rate=self.sample_rate,
            metadata=dict(self.metadata),
        )

    def time_range_indices(self, t_start: float | None, t_stop: float | None) -> tuple[int, int]:
        """Sample index range [start, stop) covering the given time range."""
        start = 0 if t_start is None else int(np.searchsorted(self.t, t_start, side="left"))
        stop = len(self) if t_stop is None else int(np.searchsorted(self.t, t_stop, side="right"))
        if stop <= start:
            raise DataError(
                f"time range [{t_start}, {t_stop}] selects no samples "
                f"(recording spans [{self.t[0]:.6g}, {self.t[-1]:.6g}] s)"
            )
        return start, stop


def moving_average(recording: RecordingPair, window: int) -> RecordingPair:
    """Centered moving-average filter over all signal columns.

    Edge samples average over the available (shrunken) window. window=1
    returns the recording unchanged.
    """
    if window < 1:
        raise DataError("moving-average window must be >= 1")
    if window == 1:
        return recording

    def smooth(arr: np.ndarray) -> np.ndarray:
        half = window // 2
        cum = np.cumsum(np.vstack([np.zeros((1, arr.shape[1])), arr]), axis=0)
        n = arr.shape[0]
        lo = np.maximum(np.arange(n) - half, 0)
        hi = np.minimum(np.arange(n) + half + 1, n)
        return (cum[hi] - cum[lo]) / (hi - lo)[:, None]

    return RecordingPair(
        t=recording.t,
        gyr1=smooth(recording.gyr1),
        acc1=smooth(recording.acc1),
        gyr2=smooth(recording.gyr2),
        acc2=smooth(recording.acc2),
        sample_rate=recording.sample_rate,
        metadata=dict(recording.metadata),
    )


def recording_to_csv(recording: RecordingPair) -> str:
    """Render a recording in the canonical CSV format (full float precision)."""
    rows = [CSV_HEADER]
    data = np.hstack(
        [
            recording.t[:, None],
            recording.gyr1,
            recording.acc1,
            recording.gyr2,
            recording.acc2,
        ]
    )
    for row in data:
        rows.append(",".join(repr(float(v)) for v in row))
    return "\n".join(rows) + "\n"


def recording_from_csv(text: str, metadata: dict | None = None) -> RecordingPair:
    """Parse the canonical CSV format; errors name the offending line."""
    lines = text.splitlines()
    if not lines:
        raise DataError("empty recording file")
    if lines[0].strip() != CSV_HEADER:
        raise DataError(f"line 1: expected header '{CSV_HEADER}'")
    values = []
    for i, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) != 13:
            raise DataError(f"line {i}: expected 13 columns, got {len(parts)}")
        try:
            values.append([float(p) for p in parts])
        except ValueError as exc:
            raise DataError(f"line {i}: non-numeric value ({exc})") from None
    if not values:
        raise DataError("recording contains no samples")
    data = np.asarray(values)
    t = data[:, 0]
    if len(t) >= 2:
        dt = np.diff(t)
        if np.any(dt <= 0.0):
            k = int(np.argmax(dt <= 0.0))
            raise DataError(f"line {k + 3}: timestamps must be strictly increasing")
        sample_rate = 1.0 / float(np.median(dt))
    else:
        sample_rate = 1.0
    return RecordingPair(
        t=t,
        gyr1=data[:, 1:4],
        acc1=data[:, 4:7],
        gyr2=data[:, 7:10],
        acc2=data[:, 10:13],
        sample_rate=sample_rate,
        metadata=metadata or {},
    )


def write_recording_csv(recording: RecordingPair, path: str | Path) -> None:
    Path(path).write_text(recording_to_csv(recording), newline="\n")


def read_recording_csv(path: str | Path) -> RecordingPair:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DataError(f"cannot read recording: {exc}") from None
    return recording_from_csv(text, metadata={"source": str(path)})


def write_ground_truth_json(sidecar: dict, path: str | Path) -> None:
    Path(path).write_text(json.dumps(sidecar, indent=2) + "\n", newline="\n")


def read_ground_truth_json(path: str | Path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DataError(f"cannot read ground truth: {exc}") from None
    try:
        sidecar = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataError(f"invalid ground-truth JSON: {exc}") from None
    for key in ("j1", "j2"):
        if key not in sidecar:
            raise DataError(f"ground-truth JSON missing '{key}'")
    return sidecar
