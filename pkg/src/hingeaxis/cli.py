"""Command-line interface; a thin client of the estimation service.

Commands run against an in-process service instance by default, or
against a remote server via --server. File reading/writing happens on the
client side; all computation happens behind the service API.

Exit codes: 0 success, 1 usage/configuration error, 2 data/parse error,
3 solver did not converge.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import httpx

from .errors import ConfigurationError, DataError, HingeAxisError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NO_CONVERGENCE = 3

METHODS = ("gyro_only", "acc_only", "combined_unweighted", "combined_weighted")


class ServiceClient:
    """POSTs JSON payloads to the service, in-process unless a URL is given."""

    def __init__(self, server: str | None = None):
        if server:
            self._client = httpx.Client(base_url=server, timeout=600.0)
        else:
            from starlette.testclient import TestClient

            from .service import create_app

            self._client = TestClient(create_app())

    def post(self, path: str, payload: dict) -> dict:
        response = self._client.post(path, json=payload)
        if response.status_code >= 400:
            try:
                body = response.json()
            except ValueError:
                body = {"detail": response.text}
            detail = body.get("detail", response.text)
            if not isinstance(detail, str):
                detail = json.dumps(detail)
            if body.get("kind") == "data":
                raise DataError(detail)
            raise ConfigurationError(detail)
        return response.json()

    def close(self):
        self._client.close()


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load_json_file(path: str, what: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DataError(f"cannot read {what}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataError(f"invalid JSON in {what} '{path}': {exc}") from None


def _write_json(path: Path, payload: dict) -> None:
    path.write_text(json.dumps(payload, indent=2) + "\n", newline="\n")


def _parse_range(text: str) -> dict:
    try:
        lo, hi = text.split(":")
        return {
            "start": float(lo) if lo else None,
            "stop": float(hi) if hi else None,
        }
    except ValueError:
        raise ConfigurationError(
            f"invalid time range '{text}'; expected t0:t1 in seconds"
        ) from None


def _parse_vector(text: str) -> list[float]:
    try:
        parts = [float(p) for p in text.split(",")]
    except ValueError:
        raise ConfigurationError(f"invalid vector '{text}'; expected x,y,z") from None
    if len(parts) != 3:
        raise ConfigurationError(f"invalid vector '{text}'; expected 3 components")
    return parts


def _read_recording_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise DataError(f"cannot read recording: {exc}") from None


def _load_run_config(args) -> dict:
    config = {}
    if getattr(args, "config", None):
        config = _load_json_file(args.config, "config file")
        if not isinstance(config, dict):
            raise ConfigurationError("config file must contain a JSON object")
    return config


def _noise_payload(args, config: dict):
    """Noise model from flags, then config; 'from-stationary' defers to the service."""
    if getattr(args, "noise_gyro", None) is not None or getattr(args, "noise_acc", None) is not None:
        if args.noise_gyro is None or args.noise_acc is None:
            raise ConfigurationError("--noise-gyro and --noise-acc must be given together")
        return {"sigma_gyro": args.noise_gyro, "sigma_acc": args.noise_acc}
    noise = config.get("noise")
    if noise == "from-stationary" or noise is None:
        return None
    return noise


def cmd_simulate(args) -> int:
    scenario = _load_json_file(args.scenario, "scenario file")
    if args.seed is not None:
        scenario["seed"] = args.seed
    client = ServiceClient(args.server)
    try:
        response = client.post("/simulate", {"scenario": scenario})
    finally:
        client.close()
    out = Path(args.output)
    out.write_text(response["recording_csv"], newline="\n")
    sidecar = out.with_suffix(".ground_truth.json")
    _write_json(sidecar, response["ground_truth"])
    s = response["summary"]
    print(f"wrote {out} ({s['samples']} samples at {s['sample_rate']:g} Hz)")
    print(f"wrote {sidecar}")
    print(
        f"{s['axis_mode']} axis, {s['speed_profile']} speed: "
        f"|angular rate| max {s['max_angular_rate']:.2f}, "
        f"mean {s['mean_angular_rate']:.2f}, "
        f"sd {s['std_angular_rate']:.2f} rad/s over {s['duration']:g} s"
    )
    return EXIT_OK


def cmd_calibrate(args) -> int:
    payload = {
        "recording_csv": _read_recording_text(args.recording),
        "stationary": _parse_range(args.stationary_range) if args.stationary_range else {},
        "gravity": args.gravity,
    }
    client = ServiceClient(args.server)
    try:
        response = client.post("/calibrate", payload)
    finally:
        client.close()
    _write_json(Path(args.output), response)
    print(f"wrote {args.output}")
    for name in ("sensor1", "sensor2"):
        cal = response[name]
        bias = ", ".join(f"{b:.6f}" for b in cal["gyro_bias"])
        print(
            f"{name}: gyro bias [{bias}] rad/s, acc gain {cal['acc_gain']:.6f}, "
            f"sigma_gyro {cal['sigma_gyro']:.6g} rad/s, sigma_acc {cal['sigma_acc']:.6g} m/s^2"
        )
    print(f"base weight w0 = {response['base_weight']:.4f}")
    return EXIT_OK


def cmd_estimate(args) -> int:
    config = _load_run_config(args)
    payload = {
        "recording_csv": _read_recording_text(args.recording),
        "method": args.method or config.get("method", "combined_weighted"),
        "seed": args.seed if args.seed is not None else config.get("seed", 0),
        "n_starts": args.starts if args.starts is not None else config.get("n_starts", 8),
        "smooth_window": args.smooth_window,
    }
    noise = _noise_payload(args, config)
    if noise is not None:
        payload["noise"] = noise
    if config.get("solver"):
        payload["solver"] = config["solver"]
    if args.stationary_range:
        payload["stationary"] = _parse_range(args.stationary_range)
    elif args.calibration:
        payload["calibration"] = _load_json_file(args.calibration, "calibration file")
    client = ServiceClient(args.server)
    try:
        response = client.post("/estimate", payload)
    finally:
        client.close()
    _write_json(Path(args.output), response)
    j1 = ", ".join(f"{v:.6f}" for v in response["j1"])
    j2 = ", ".join(f"{v:.6f}" for v in response["j2"])
    print(f"method {response['method']}: converged={response['converged']} "
          f"in {response['iterations']} iterations, cost {response['final_cost']:.6g}")
    print(f"j1 = [{j1}]")
    print(f"j2 = [{j2}]")
    print(f"wrote {args.output}")
    if not response["converged"]:
        print(f"warning: not converged ({response['diagnostic']})", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    return EXIT_OK


def cmd_evaluate(args) -> int:
    config = _load_run_config(args)
    methods = args.methods.split(",") if args.methods else config.get("methods", list(METHODS))
    payload = {
        "recording_csv": _read_recording_text(args.recording),
        "methods": methods,
        "segments": args.segments if args.segments is not None else config.get("segments", 100),
        "window": args.window if args.window is not None else config.get("window", 500),
        "seed": args.seed if args.seed is not None else config.get("seed", 0),
        "smooth_window": args.smooth_window,
    }
    noise = _noise_payload(args, config)
    if noise is not None:
        payload["noise"] = noise
    if config.get("solver"):
        payload["solver"] = config["solver"]
    if args.ground_truth:
        payload["ground_truth"] = _load_json_file(args.ground_truth, "ground-truth file")
    if args.reference_j1:
        payload["reference_j1"] = _parse_vector(args.reference_j1)
    if args.reference_j2:
        payload["reference_j2"] = _parse_vector(args.reference_j2)
    if args.stationary_range:
        payload["stationary"] = _parse_range(args.stationary_range)
    elif args.calibration:
        payload["calibration"] = _load_json_file(args.calibration, "calibration file")
    client = ServiceClient(args.server)
    try:
        response = client.post("/evaluate", payload)
    finally:
        client.close()
    out = Path(args.output)
    metrics_csv = response.pop("metrics_csv")
    segments_csv = response.pop("segment_errors_csv")
    _write_json(out, response)
    metrics_path = out.with_suffix(".metrics.csv")
    segments_path = out.with_suffix(".segments.csv")
    metrics_path.write_text(metrics_csv, newline="\n")
    segments_path.write_text(segments_csv, newline="\n")
    print(f"wrote {out}, {metrics_path}, {segments_path}")
    print(f"{'method':<22} {'MAD(SAD) j1':>16} {'MAD(SAD) j2':>16}")
    for m in response["methods"]:
        j1 = f"{m['j1']['mad_deg']:.2f}({m['j1']['sad_deg']:.2f})"
        j2 = f"{m['j2']['mad_deg']:.2f}({m['j2']['sad_deg']:.2f})"
        print(f"{m['method']:<22} {j1:>16} {j2:>16}")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hingeaxis", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--server", help="base URL of a running service (default: in-process)")
        p.add_argument("--seed", type=int, default=None, help="random seed")

    p_sim = sub.add_parser("simulate", help="generate a synthetic hinge recording")
    p_sim.add_argument("scenario", help="scenario JSON file")
    p_sim.add_argument("--output", required=True, help="recording CSV path")
    add_common(p_sim)
    p_sim.set_defaults(func=cmd_simulate)

    p_cal = sub.add_parser("calibrate", help="estimate sensor calibration from stationary data")
    p_cal.add_argument("recording", help="recording CSV file")
    p_cal.add_argument("--stationary-range", help="time range t0:t1 (s); default: whole file")
    p_cal.add_argument("--gravity", type=float, default=9.81)
    p_cal.add_argument("--output", required=True, help="calibration JSON path")
    add_common(p_cal)
    p_cal.set_defaults(func=cmd_calibrate)

    p_est = sub.add_parser("estimate", help="estimate the joint axis pair from a recording")
    p_est.add_argument("recording", help="recording CSV file")
    p_est.add_argument("--output", required=True, help="result JSON path")
    p_est.add_argument("--method", choices=METHODS, default=None)
    p_est.add_argument("--config", help="run-config JSON file (flags win)")
    p_est.add_argument("--calibration", help="calibration JSON from the calibrate command")
    p_est.add_argument("--stationary-range", help="stationary prefix/suffix t0:t1 used to self-calibrate")
    p_est.add_argument("--starts", type=int, default=None, help="random restarts (default 8)")
    p_est.add_argument("--noise-gyro", type=float, default=None, help="gyro noise std, rad/s")
    p_est.add_argument("--noise-acc", type=float, default=None, help="acc noise std, m/s^2")
    p_est.add_argument("--smooth-window", type=int, default=1,
                       help="optional moving-average width in samples (default: off)")
    add_common(p_est)
    p_est.set_defaults(func=cmd_estimate)

    p_eval = sub.add_parser("evaluate", help="run the multi-method evaluation protocol")
    p_eval.add_argument("recording", help="recording CSV file")
    p_eval.add_argument("--output", required=True, help="report JSON path")
    p_eval.add_argument("--ground-truth", help="ground-truth sidecar JSON")
    p_eval.add_argument("--reference-j1", help="reference axis in frame 1 as x,y,z")
    p_eval.add_argument("--reference-j2", help="reference axis in frame 2 as x,y,z")
    p_eval.add_argument("--methods", help="comma-separated subset of: " + ",".join(METHODS))
    p_eval.add_argument("--segments", type=int, default=None, help="number of segments M")
    p_eval.add_argument("--window", type=int, default=None, help="samples per segment N")
    p_eval.add_argument("--config", help="run-config JSON file (flags win)")
    p_eval.add_argument("--calibration", help="calibration JSON to apply first")
    p_eval.add_argument("--stationary-range", help="stationary prefix/suffix t0:t1")
    p_eval.add_argument("--noise-gyro", type=float, default=None)
    p_eval.add_argument("--noise-acc", type=float, default=None)
    p_eval.add_argument("--smooth-window", type=int, default=1)
    add_common(p_eval)
    p_eval.set_defaults(func=cmd_evaluate)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (ConfigurationError, HingeAxisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except httpx.HTTPError as exc:
        print(f"error: cannot reach service ({exc})", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
