"""Synthetic two-segment hinge recordings with exact ground truth.

The mechanism is generated analytically: every orientation is a product of
elementary rotations whose angles (and their first two derivatives) are
closed-form functions of time, so angular velocities and accelerations are
exact rather than integrated. Sensor i sits at a fixed offset r_i from the
joint center (expressed in its own frame); its accelerometer reads the
specific force

    acc_i = R_i^T (c_dd - g) + w_i x (w_i x r_i) + w_dot_i x r_i

where c_dd is the joint-center acceleration and g the gravity vector, so a
resting sensor reads magnitude ||g||. Gyroscopes read the body angular
rates plus an optional constant bias. Noise is white Gaussian per axis.

Speed profiles use rate waves of the form peak * sin^3(w t + p): the peak
rate is attained exactly, and the wave starts at rest (zero angle, rate and
angular acceleration), which keeps an optional stationary preamble twice
differentiable. Profile scales are calibrated so that the maximum sensor
angular-rate magnitude matches the target of the regime (4.1 rad/s fast,
0.55 rad/s slow); mixed motion alternates regimes on 5-10 s intervals.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError
from .kinematics import rotation_about_axis, rotation_between
from .recording import RecordingPair
from .residuals import NoiseModel

AXIS_MODES = ("free", "vertical", "horizontal")
SPEED_PROFILES = ("fast", "slow", "mixed")

STARTUP_RAMP = 2.0  # s, smooth ramp-in of all motion
REGIME_RAMP = 1.5  # s, smooth fast/slow regime transitions
TARGET_PEAK_RATE = {"fast": 4.1, "slow": 0.55}

_EX = np.array([1.0, 0.0, 0.0])
_EY = np.array([0.0, 1.0, 0.0])
_EZ = np.array([0.0, 0.0, 1.0])

_DEFAULT_J1 = np.array([0.36, -0.48, 0.80])
_DEFAULT_J2 = np.array([-0.60, 0.64, 0.48])
_DEFAULT_R1 = np.array([0.10, 0.05, -0.02])
_DEFAULT_R2 = np.array([-0.08, 0.03, 0.04])
_DEFAULT_CENTER_AMPLITUDE = np.array([0.25, 0.18, 0.12])


# ---------------------------------------------------------------------------
# Closed-form angle profiles: eval(tau) -> (value, rate, accel)
# ---------------------------------------------------------------------------


def _smoothstep(u: np.ndarray, width: float):
    """Quintic smoothstep on [0, 1] with zero first/second derivatives at both ends."""
    u = np.clip(u, 0.0, 1.0)
    s = u**3 * (10.0 - 15.0 * u + 6.0 * u * u)
    ds = 30.0 * u * u * (1.0 - u) ** 2 / width
    dds = (60.0 * u - 180.0 * u * u + 120.0 * u**3) / width / width
    return s, ds, dds


@dataclass(frozen=True)
class SinCubedWave:
    """Profile with rate peak * sin^3(omega*tau + phase); value starts at 0."""

    peak_rate: float
    omega: float
    phase: float = 0.0

    def _antiderivative(self, u):
        # integral of sin^3 is cos^3/3 - cos
        return (self.peak_rate / self.omega) * (np.cos(u) ** 3 / 3.0 - np.cos(u))

    def eval(self, tau: np.ndarray):
        u = self.omega * tau + self.phase
        value = self._antiderivative(u) - self._antiderivative(np.full_like(u, self.phase))
        s = np.sin(u)
        rate = self.peak_rate * s**3
        accel = 3.0 * self.peak_rate * self.omega * s * s * np.cos(u)
        return value, rate, accel

    def scaled(self, c: float) -> "SinCubedWave":
        return SinCubedWave(self.peak_rate * c, self.omega, self.phase)


@dataclass(frozen=True)
class ZeroAngle:
    def eval(self, tau: np.ndarray):
        z = np.zeros_like(tau)
        return z, z.copy(), z.copy()

    def scaled(self, c: float) -> "ZeroAngle":
        return self


@dataclass(frozen=True)
class BlendedAngle:
    """Alternates between a slow and a fast profile on a switch schedule."""

    slow: SinCubedWave
    fast: SinCubedWave
    switch_times: np.ndarray
    ramp: float = REGIME_RAMP

    def _blend_state(self, tau: np.ndarray):
        times = np.asarray(self.switch_times, dtype=float)
        if times.size == 0:
            zeros = np.zeros_like(tau)
            return zeros, zeros.copy(), zeros.copy()
        k = np.searchsorted(times, tau, side="right")
        s = (k % 2).astype(float)  # regime after k switches; starts slow
        ds = np.zeros_like(s)
        dds = np.zeros_like(s)
        active = k >= 1
        if np.any(active):
            since = np.where(active, tau - times[np.maximum(k - 1, 0)], np.inf)
            in_ramp = since < self.ramp
            if np.any(in_ramp):
                sig, dsig, ddsig = _smoothstep(since[in_ramp] / self.ramp, self.ramp)
                prev = ((k[in_ramp] - 1) % 2).astype(float)
                cur = (k[in_ramp] % 2).astype(float)
                step = cur - prev  # +1 or -1
                s[in_ramp] = prev + step * sig
                ds[in_ramp] = step * dsig
                dds[in_ramp] = step * ddsig
        return s, ds, dds

    def eval(self, tau: np.ndarray):
        a_s, da_s, dda_s = self.slow.eval(tau)
        a_f, da_f, dda_f = self.fast.eval(tau)
        s, ds, dds = self._blend_state(tau)
        gap = a_f - a_s
        dgap = da_f - da_s
        value = a_s + s * gap
        rate = da_s + ds * gap + s * dgap
        accel = dda_s + dds * gap + 2.0 * ds * dgap + s * (dda_f - dda_s)
        return value, rate, accel

    def scaled(self, c: float) -> "BlendedAngle":
        return BlendedAngle(self.slow.scaled(c), self.fast.scaled(c), self.switch_times, self.ramp)


@dataclass(frozen=True)
class RampedAngle:
    """Multiplies a profile by a smooth startup ramp so motion begins at rest."""

    inner: object
    ramp: float = STARTUP_RAMP

    def eval(self, tau: np.ndarray):
        a, da, dda = self.inner.eval(tau)
        s, ds, dds = _smoothstep(tau / self.ramp, self.ramp)
        value = s * a
        rate = ds * a + s * da
        accel = dds * a + 2.0 * ds * da + s * dda
        return value, rate, accel

    def scaled(self, c: float) -> "RampedAngle":
        return RampedAngle(self.inner.scaled(c), self.ramp)


def _regime_schedule(duration: float, rng: np.random.Generator) -> np.ndarray:
    """Switch times for mixed motion: interval lengths uniform in [5, 10] s."""
    times = []
    t = float(rng.uniform(5.0, 10.0))
    while t < duration:
        times.append(t)
        t += float(rng.uniform(5.0, 10.0))
    return np.asarray(times)


def joint_angle_profile(profile: str, seed: int = 0, duration: float = 60.0):
    """Canonical joint-angle profile object for a speed regime.

    Fast peaks at 4.0 rad/s, slow at 0.55 rad/s; mixed alternates the two
    on a seeded 5-10 s schedule.
    """
    if profile == "fast":
        return SinCubedWave(4.0, 2.9)
    if profile == "slow":
        return SinCubedWave(0.55, 0.52)
    if profile == "mixed":
        rng = np.random.default_rng([int(seed), 0])
        schedule = _regime_schedule(duration, rng)
        return BlendedAngle(SinCubedWave(0.55, 0.52), SinCubedWave(4.0, 2.9), schedule)
    raise ConfigurationError(f"unknown speed profile '{profile}'")


def speed_profile_angle(profile: str, t, seed: int = 0, duration: float | None = None):
    """Joint angle (rad) of the canonical speed profile at times t."""
    t = np.asarray(t, dtype=float)
    if duration is None:
        duration = float(t.max()) if t.size else 60.0
    angle, _, _ = joint_angle_profile(profile, seed=seed, duration=duration).eval(t)
    return angle


# ---------------------------------------------------------------------------
# Scenario and motion construction
# ---------------------------------------------------------------------------


def _unit(v, name: str) -> np.ndarray:
    v = np.asarray(v, dtype=float).reshape(3)
    norm = float(np.linalg.norm(v))
    if norm < 1e-12:
        raise ConfigurationError(f"{name} must be a nonzero vector")
    return v / norm


@dataclass
class HingeScenario:
    """Configuration of a synthetic hinge-mechanism recording."""

    j1_true: np.ndarray = field(default_factory=lambda: _DEFAULT_J1.copy())
    j2_true: np.ndarray = field(default_factory=lambda: _DEFAULT_J2.copy())
    r1: np.ndarray = field(default_factory=lambda: _DEFAULT_R1.copy())
    r2: np.ndarray = field(default_factory=lambda: _DEFAULT_R2.copy())
    axis_mode: str = "free"
    speed_profile: str = "fast"
    duration: float = 60.0
    sample_rate: float = 100.0
    gravity: np.ndarray = field(default_factory=lambda: np.array([0.0, 0.0, -9.81]))
    noise: NoiseModel | None = None
    gyro_bias1: np.ndarray = field(default_factory=lambda: np.zeros(3))
    gyro_bias2: np.ndarray = field(default_factory=lambda: np.zeros(3))
    center_amplitude: np.ndarray | None = None  # m; None picks a mode default
    stationary_preamble: float = 0.0  # s of rest prepended to the motion
    seed: int = 0

    def __post_init__(self):
        if self.axis_mode not in AXIS_MODES:
            raise ConfigurationError(f"axis_mode must be one of {AXIS_MODES}")
        if self.speed_profile not in SPEED_PROFILES:
            raise ConfigurationError(f"speed_profile must be one of {SPEED_PROFILES}")
        if self.duration <= 0.0 or self.sample_rate <= 0.0:
            raise ConfigurationError("duration and sample_rate must be positive")
        if self.stationary_preamble < 0.0:
            raise ConfigurationError("stationary_preamble must be >= 0")
        self.j1_true = _unit(self.j1_true, "j1_true")
        self.j2_true = _unit(self.j2_true, "j2_true")
        self.r1 = np.asarray(self.r1, dtype=float).reshape(3)
        self.r2 = np.asarray(self.r2, dtype=float).reshape(3)
        self.gravity = np.asarray(self.gravity, dtype=float).reshape(3)
        self.gyro_bias1 = np.asarray(self.gyro_bias1, dtype=float).reshape(3)
        self.gyro_bias2 = np.asarray(self.gyro_bias2, dtype=float).reshape(3)
        if self.center_amplitude is None:
            self.center_amplitude = (
                _DEFAULT_CENTER_AMPLITUDE.copy() if self.axis_mode == "free" else np.zeros(3)
            )
        else:
            self.center_amplitude = np.asarray(self.center_amplitude, dtype=float).reshape(3)

    def to_dict(self) -> dict:
        out = dataclasses.asdict(self)
        for key, value in out.items():
            if isinstance(value, np.ndarray):
                out[key] = [float(v) for v in value]
        out["noise"] = (
            None
            if self.noise is None
            else {"sigma_gyro": self.noise.sigma_gyro, "sigma_acc": self.noise.sigma_acc}
        )
        return out


# Nominal (pre-calibration) profile constants per regime. Carrier waves use
# relative peak rates; the common scale is calibrated per scenario.
_ROT_PARAMS = {
    "fast": {
        "joint": (2.2, 2.9, 0.0),
        "free_carriers": ((1.0, 1.70, 0.3), (0.85, 1.17, 1.8), (0.7, 0.73, 4.0)),
        "planar_carrier": (1.3, 1.10, 0.9),
        "trans_freqs": (1.30, 0.90, 0.70),
    },
    "slow": {
        "joint": (2.2, 0.52, 0.0),
        "free_carriers": ((1.0, 0.31, 0.3), (0.85, 0.21, 1.8), (0.7, 0.13, 4.0)),
        "planar_carrier": (1.3, 0.20, 0.9),
        "trans_freqs": (0.26, 0.18, 0.14),
    },
}
_TRANS_PHASES = (0.7, 2.1, 3.5)


class _RotationChain:
    """Product of fixed rotations and single-axis profiled rotations."""

    def __init__(self, nodes):
        self._nodes = nodes  # ("fixed", R) or ("rot", axis, profile)

    def eval(self, tau: np.ndarray):
        n = tau.shape[0]
        r_tot = np.broadcast_to(np.eye(3), (n, 3, 3)).copy()
        w_tot = np.zeros((n, 3))
        dw_tot = np.zeros((n, 3))
        for node in self._nodes:
            if node[0] == "fixed":
                r_b = np.broadcast_to(node[1], (n, 3, 3))
                w_b = np.zeros((n, 3))
                dw_b = np.zeros((n, 3))
            else:
                _, axis, profile = node
                angle, rate, accel = profile.eval(tau)
                r_b = rotation_about_axis(axis, angle)
                w_b = rate[:, None] * axis
                dw_b = accel[:, None] * axis
            # Body-rate composition for R = Ra @ Rb:
            #   w  = Rb^T wa + wb
            #   dw = Rb^T dwa - wb x (Rb^T wa) + dwb
            wa_in_b = np.einsum("nji,nj->ni", r_b, w_tot)
            dwa_in_b = np.einsum("nji,nj->ni", r_b, dw_tot)
            w_new = wa_in_b + w_b
            dw_new = dwa_in_b - np.cross(w_b, wa_in_b) + dw_b
            r_tot = np.einsum("nij,njk->nik", r_tot, r_b)
            w_tot, dw_tot = w_new, dw_new
        return r_tot, w_tot, dw_tot


@dataclass
class _Motion:
    chain1: _RotationChain
    chain2: _RotationChain
    joint_profile: object
    translation: list  # per-component displacement profiles

    def rates(self, tau: np.ndarray):
        _, w1, _ = self.chain1.eval(tau)
        _, w2, _ = self.chain2.eval(tau)
        return w1, w2


def _make_profile(params, speed_profile, key, index, schedule, scales):
    """Build the (possibly blended) profile for one rotation slot.

    scales maps regime name to the calibrated peak-rate scale; blended
    profiles scale each regime independently so both hit their targets.
    """
    if speed_profile == "mixed":
        fast = _wave_from(params["fast"], key, index).scaled(scales["fast"])
        slow = _wave_from(params["slow"], key, index).scaled(scales["slow"])
        return BlendedAngle(slow, fast, schedule)
    return _wave_from(params[speed_profile], key, index).scaled(scales[speed_profile])


def _wave_from(regime, key, index) -> SinCubedWave:
    if key == "joint":
        p, w, ph = regime["joint"]
        return SinCubedWave(p, w, ph)
    if key == "free_carrier":
        p, w, ph = regime["free_carriers"][index]
        return SinCubedWave(p, w, ph)
    if key == "planar_carrier":
        p, w, ph = regime["planar_carrier"]
        return SinCubedWave(p, w, ph)
    raise KeyError(key)


def _build_motion(scenario: HingeScenario, scales: dict[str, float]) -> _Motion:
    params = _ROT_PARAMS
    if scenario.speed_profile == "mixed":
        rng = np.random.default_rng([int(scenario.seed), 0])
        schedule = _regime_schedule(scenario.duration, rng)
    else:
        schedule = None

    def ramped(key, index=0):
        profile = _make_profile(params, scenario.speed_profile, key, index, schedule, scales)
        return RampedAngle(profile)

    joint = ramped("joint")

    nodes1 = []
    if scenario.axis_mode == "free":
        for idx, axis in enumerate((_EZ, _EY, _EX)):
            nodes1.append(("rot", axis, ramped("free_carrier", idx)))
    else:
        global_axis = _EZ if scenario.axis_mode == "vertical" else _EX
        nodes1.append(("rot", global_axis, ramped("planar_carrier")))
        nodes1.append(("fixed", rotation_between(scenario.j1_true, global_axis)))

    align = rotation_between(scenario.j2_true, scenario.j1_true)
    nodes2 = list(nodes1) + [("fixed", align), ("rot", scenario.j2_true, joint)]

    translation = []
    for comp in range(3):
        amplitude = float(scenario.center_amplitude[comp])
        if amplitude == 0.0:
            translation.append(ZeroAngle())
            continue

        def disp_wave(regime):
            w = regime["trans_freqs"][comp]
            return SinCubedWave(0.75 * amplitude * w, w, _TRANS_PHASES[comp])

        if scenario.speed_profile == "mixed":
            prof = BlendedAngle(disp_wave(params["slow"]), disp_wave(params["fast"]), schedule)
        else:
            prof = disp_wave(params[scenario.speed_profile])
        translation.append(RampedAngle(prof))

    return _Motion(
        chain1=_RotationChain(nodes1),
        chain2=_RotationChain(nodes2),
        joint_profile=joint,
        translation=translation,
    )


def _calibrated_motion(scenario: HingeScenario) -> _Motion:
    """Scale rotation profiles so the peak sensor rate hits the regime target."""
    n = max(int(round(scenario.duration * scenario.sample_rate)), 2)
    tau = np.arange(n) / scenario.sample_rate
    scales = {"fast": 1.0, "slow": 1.0}
    regimes = ("fast", "slow") if scenario.speed_profile == "mixed" else (scenario.speed_profile,)
    for regime in regimes:
        # Calibrate each regime on a pure-regime stand-in of this scenario.
        pure = dataclasses.replace(scenario, speed_profile=regime)
        scales[regime] = _solve_scale(pure, tau, TARGET_PEAK_RATE[regime])
    return _build_motion(scenario, scales)


def _solve_scale(scenario: HingeScenario, tau: np.ndarray, target: float) -> float:
    scale = 1.0
    for _ in range(6):
        motion = _build_motion(scenario, {scenario.speed_profile: scale})
        w1, w2 = motion.rates(tau)
        peak = max(float(np.linalg.norm(w1, axis=1).max()), float(np.linalg.norm(w2, axis=1).max()))
        if peak <= 0.0:
            break
        scale *= target / peak
        if abs(peak - target) <= 0.005 * target:
            break
    return scale


# ---------------------------------------------------------------------------
# Simulation
# ---------------------------------------------------------------------------


@dataclass
class GroundTruth:
    """Exact per-sample state of the simulated mechanism."""

    scenario: HingeScenario
    t: np.ndarray
    rot1: np.ndarray  # (N, 3, 3), sensor-1 frame to global
    rot2: np.ndarray
    joint_angle: np.ndarray
    omega1: np.ndarray  # body angular rates, rad/s
    omega2: np.ndarray
    omega_dot1: np.ndarray
    omega_dot2: np.ndarray
    center_acc: np.ndarray  # joint-center acceleration, global frame

    def global_axis(self) -> np.ndarray:
        """Joint axis in the global frame, from sensor 1."""
        return np.einsum("nij,j->ni", self.rot1, self.scenario.j1_true)

    def axis_alignment_error(self) -> float:
        """Max norm of R1 j1 - R2 j2 over all samples (hinge consistency)."""
        n1 = self.global_axis()
        n2 = np.einsum("nij,j->ni", self.rot2, self.scenario.j2_true)
        return float(np.linalg.norm(n1 - n2, axis=1).max())

    def to_sidecar(self) -> dict:
        return {
            "j1": [float(v) for v in self.scenario.j1_true],
            "j2": [float(v) for v in self.scenario.j2_true],
            "r1": [float(v) for v in self.scenario.r1],
            "r2": [float(v) for v in self.scenario.r2],
            "joint_angle": [float(v) for v in self.joint_angle],
            "scenario": self.scenario.to_dict(),
        }


@dataclass(frozen=True)
class MotionSummary:
    samples: int
    duration: float
    sample_rate: float
    max_angular_rate: float
    mean_angular_rate: float
    std_angular_rate: float
    axis_mode: str
    speed_profile: str


def motion_summary(truth: GroundTruth) -> MotionSummary:
    """Angular-rate statistics pooled over both sensors (motion part only)."""
    mask = truth.t >= truth.scenario.stationary_preamble
    mags = np.concatenate(
        [
            np.linalg.norm(truth.omega1[mask], axis=1),
            np.linalg.norm(truth.omega2[mask], axis=1),
        ]
    )
    if mags.size == 0:
        mags = np.zeros(1)
    return MotionSummary(
        samples=int(truth.t.shape[0]),
        duration=float(truth.scenario.stationary_preamble + truth.scenario.duration),
        sample_rate=float(truth.scenario.sample_rate),
        max_angular_rate=float(mags.max()),
        mean_angular_rate=float(mags.mean()),
        std_angular_rate=float(mags.std()),
        axis_mode=truth.scenario.axis_mode,
        speed_profile=truth.scenario.speed_profile,
    )


def _motion_states(scenario: HingeScenario, t: np.ndarray):
    motion = _calibrated_motion(scenario)
    tau = np.maximum(t - scenario.stationary_preamble, 0.0)
    rot1, w1, dw1 = motion.chain1.eval(tau)
    rot2, w2, dw2 = motion.chain2.eval(tau)
    angle, _, _ = motion.joint_profile.eval(tau)
    center_acc = np.zeros((t.shape[0], 3))
    for comp in range(3):
        _, _, acc = motion.translation[comp].eval(tau)
        center_acc[:, comp] = acc
    return rot1, rot2, w1, w2, dw1, dw2, angle, center_acc


def orientation_trajectories(scenario: HingeScenario, t) -> tuple[np.ndarray, np.ndarray]:
    """Exact segment orientations R1(t), R2(t) for arbitrary times."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    rot1, rot2, *_ = _motion_states(scenario, t)
    return rot1, rot2


def simulate(scenario: HingeScenario) -> tuple[RecordingPair, GroundTruth]:
    """Generate a synchronized recording and its exact ground truth."""
    total = scenario.stationary_preamble + scenario.duration
    n = int(round(total * scenario.sample_rate))
    if n < 1:
        raise ConfigurationError("scenario produces no samples")
    t = np.arange(n) / scenario.sample_rate

    rot1, rot2, w1, w2, dw1, dw2, angle, center_acc = _motion_states(scenario, t)

    spec_force = center_acc - scenario.gravity  # global specific force at the joint
    acc1 = np.einsum("nji,nj->ni", rot1, spec_force) + np.cross(w1, np.cross(w1, scenario.r1)) + np.cross(dw1, scenario.r1)
    acc2 = np.einsum("nji,nj->ni", rot2, spec_force) + np.cross(w2, np.cross(w2, scenario.r2)) + np.cross(dw2, scenario.r2)
    gyr1 = w1 + scenario.gyro_bias1
    gyr2 = w2 + scenario.gyro_bias2

    if scenario.noise is not None:
        rng = np.random.default_rng([int(scenario.seed), 1])
        gyr1 = gyr1 + rng.normal(0.0, scenario.noise.sigma_gyro, gyr1.shape)
        acc1 = acc1 + rng.normal(0.0, scenario.noise.sigma_acc, acc1.shape)
        gyr2 = gyr2 + rng.normal(0.0, scenario.noise.sigma_gyro, gyr2.shape)
        acc2 = acc2 + rng.normal(0.0, scenario.noise.sigma_acc, acc2.shape)

    recording = RecordingPair(
        t=t,
        gyr1=gyr1,
        acc1=acc1,
        gyr2=gyr2,
        acc2=acc2,
        sample_rate=scenario.sample_rate,
        metadata={
            "source": "simulator",
            "axis_mode": scenario.axis_mode,
            "speed_profile": scenario.speed_profile,
            "seed": int(scenario.seed),
        },
    )
    truth = GroundTruth(
        scenario=scenario,
        t=t,
        rot1=rot1,
        rot2=rot2,
        joint_angle=angle,
        omega1=w1,
        omega2=w2,
        omega_dot1=dw1,
        omega_dot2=dw2,
        center_acc=center_acc,
    )
    return recording, truth


def simulate_stationary(
    duration: float = 10.0,
    sample_rate: float = 100.0,
    orientation1: np.ndarray | None = None,
    orientation2: np.ndarray | None = None,
    gravity: np.ndarray = (0.0, 0.0, -9.81),
    noise: NoiseModel | None = None,
    gyro_bias1: np.ndarray = (0.0, 0.0, 0.0),
    gyro_bias2: np.ndarray = (0.0, 0.0, 0.0),
    acc_scale1: float = 1.0,
    acc_scale2: float = 1.0,
    seed: int = 0,
) -> RecordingPair:
    """Recording of two motionless sensors (for calibration workflows).

    acc_scale models a sensor gain error: measured = acc_scale * specific
    force + noise, so the recovered calibration gain is 1 / acc_scale.
    """
    n = int(round(duration * sample_rate))
    t = np.arange(n) / sample_rate
    gravity = np.asarray(gravity, dtype=float).reshape(3)
    r1 = np.eye(3) if orientation1 is None else np.asarray(orientation1, dtype=float)
    r2 = np.eye(3) if orientation2 is None else np.asarray(orientation2, dtype=float)
    f1 = np.tile(r1.T @ (-gravity), (n, 1)) * acc_scale1
    f2 = np.tile(r2.T @ (-gravity), (n, 1)) * acc_scale2
    g1 = np.tile(np.asarray(gyro_bias1, dtype=float).reshape(3), (n, 1))
    g2 = np.tile(np.asarray(gyro_bias2, dtype=float).reshape(3), (n, 1))
    if noise is not None:
        rng = np.random.default_rng([int(seed), 1])
        g1 = g1 + rng.normal(0.0, noise.sigma_gyro, g1.shape)
        f1 = f1 + rng.normal(0.0, noise.sigma_acc, f1.shape)
        g2 = g2 + rng.normal(0.0, noise.sigma_gyro, g2.shape)
        f2 = f2 + rng.normal(0.0, noise.sigma_acc, f2.shape)
    return RecordingPair(
        t=t,
        gyr1=g1,
        acc1=f1,
        gyr2=g2,
        acc2=f2,
        sample_rate=sample_rate,
        metadata={"source": "simulator_stationary", "seed": int(seed)},
    )
