"""Command-line front end.

Subcommands:
  interpolate   sample one interpolation scheme and export CSV/JSON
  reproduce     rerun the two built-in benchmark motions with verdicts
  validate      run the named invariant suites

Exit codes: 0 ok, 1 internal error, 2 config error, 3 domain error
(log/dexp singularity).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import interp, validate as validation
from .errors import (
    AngleNearPiError,
    ConflictingGoalError,
    LogDomainError,
    ScrewMotionError,
)
from .liecore import MetricWeights, Pose, check_rotation
from .oracle import compare

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_CONFIG = 2
EXIT_DOMAIN = 3

MODES = ("geodesic", "iv1", "iv2", "iv3", "iv4", "bv-cubic", "min-acc")

# Twist fields each mode requires, beyond the terminal goal.
_MODE_FIELDS = {
    "geodesic": (),
    "iv1": (),
    "iv2": ("v0",),
    "iv3": ("v0", "vdot0"),
    "iv4": ("v0", "vdot0", "vddot0"),
    "bv-cubic": ("v0", "vt"),
    "min-acc": (),
}

CSV_COMMENT = "# screw components ordered angular-first: (wx,wy,wz,vx,vy,vz)"
CSV_HEADER = (
    "tau,"
    + ",".join(f"X{i}" for i in range(6))
    + ","
    + ",".join(f"R{i}{j}" for i in range(3) for j in range(3))
    + ","
    + ",".join(f"p{i}" for i in range(3))
    + ","
    + ",".join(f"V{i}" for i in range(6))
)


@dataclass
class RunConfig:
    mode: str
    duration: float
    samples: int
    out: str
    format: str = "csv"
    xt: np.ndarray | None = None
    terminal_pose: Pose | None = None
    v0: np.ndarray | None = None
    vdot0: np.ndarray | None = None
    vddot0: np.ndarray | None = None
    vdddot0: np.ndarray | None = None
    vt: np.ndarray | None = None
    alpha: float = 1.0
    beta: float = 1.0


@dataclass(frozen=True)
class TrajectorySample:
    tau: float
    X: np.ndarray
    rotation: np.ndarray  # 3x3
    translation: np.ndarray
    twist: np.ndarray


class ConfigError(Exception):
    """Invalid run configuration; message names the offending field."""


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _parse_tuple(text, n: int, field: str) -> np.ndarray:
    if isinstance(text, (list, tuple)):
        values = [float(v) for v in text]
    else:
        values = [float(v) for v in str(text).split(",") if v.strip() != ""]
    if len(values) != n:
        raise ConfigError(f"field '{field}' needs {n} comma-separated numbers")
    return np.array(values)


def _build_config(raw: dict) -> RunConfig:
    mode = raw.get("mode")
    if mode not in MODES:
        raise ConfigError(f"field 'mode' must be one of {', '.join(MODES)}")
    try:
        duration = float(raw.get("duration", 0.0))
    except (TypeError, ValueError):
        raise ConfigError("field 'duration' must be a number")
    if duration <= 0.0:
        raise ConfigError("field 'duration' must be positive")
    try:
        samples = int(raw.get("samples", 0))
    except (TypeError, ValueError):
        raise ConfigError("field 'samples' must be an integer")
    if samples < 2:
        raise ConfigError("field 'samples' must be at least 2")
    out = raw.get("out")
    if not out:
        raise ConfigError("field 'out' is required")
    fmt = raw.get("format", "csv")
    if fmt not in ("csv", "json"):
        raise ConfigError("field 'format' must be 'csv' or 'json'")

    cfg = RunConfig(mode=mode, duration=duration, samples=samples, out=str(out), format=fmt)
    if raw.get("xt") is not None:
        cfg.xt = _parse_tuple(raw["xt"], 6, "xt")
    if raw.get("terminal_pose") is not None:
        vals = _parse_tuple(raw["terminal_pose"], 12, "terminal_pose")
        try:
            R = check_rotation(vals[:9].reshape(3, 3))
        except ValueError as exc:
            raise ConfigError(f"field 'terminal_pose': {exc}")
        cfg.terminal_pose = Pose(R, vals[9:])
    if cfg.xt is None and cfg.terminal_pose is None:
        raise ConfigError("field 'xt' (or 'terminal_pose') is required")
    for name in ("v0", "vdot0", "vddot0", "vdddot0", "vt"):
        if raw.get(name) is not None:
            setattr(cfg, name, _parse_tuple(raw[name], 6, name))
    for name in _MODE_FIELDS[mode]:
        if getattr(cfg, name) is None:
            raise ConfigError(f"field '{name}' is required for mode '{mode}'")
    try:
        cfg.alpha = float(raw.get("alpha", 1.0))
        cfg.beta = float(raw.get("beta", 1.0))
    except (TypeError, ValueError):
        raise ConfigError("fields 'alpha'/'beta' must be numbers")
    return cfg


def _build_curve(cfg: RunConfig) -> interp.InterpolationCurve:
    C0 = Pose.identity()
    X_T = interp.resolve_terminal(C0, cfg.xt, cfg.terminal_pose)
    if cfg.mode == "geodesic":
        return interp.geodesic(X_T, cfg.duration, C0)
    if cfg.mode == "min-acc":
        return interp.min_acceleration(X_T, cfg.duration, C0)
    if cfg.mode == "bv-cubic":
        data = interp.BoundaryData(X_T, cfg.v0, cfg.vt)
        return interp.bv_tip_cubic(data, cfg.duration, C0)
    k = int(cfg.mode[2])
    jet = [getattr(cfg, n) for n in _MODE_FIELDS[cfg.mode]]
    return interp.iv_tip(k, X_T, cfg.duration, jet, C0)


def _sample_curve(curve: interp.InterpolationCurve, samples: int) -> list[TrajectorySample]:
    rows = []
    for i in range(samples + 1):
        tau = i / samples
        t = tau * curve.duration
        X, pose = interp.curve_eval(curve, t)
        rows.append(
            TrajectorySample(tau, X, pose.rotation, pose.translation, interp.curve_twist(curve, t))
        )
    return rows


def _write_samples(rows: list[TrajectorySample], out: str, fmt: str) -> None:
    path = Path(out)
    if fmt == "csv":
        lines = [CSV_COMMENT, CSV_HEADER]
        for s in rows:
            vals = [s.tau, *s.X, *s.rotation.reshape(9), *s.translation, *s.twist]
            lines.append(",".join(_fmt(v) for v in vals))
        path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    else:
        payload = {
            "screw_ordering": "angular-first",
            "samples": [
                {
                    "tau": s.tau,
                    "X": list(s.X),
                    "rotation": [list(r) for r in s.rotation],
                    "translation": list(s.translation),
                    "twist": list(s.twist),
                }
                for s in rows
            ],
        }
        path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8", newline="\n")


def cmd_interpolate(args) -> int:
    raw = {}
    if args.config:
        try:
            raw.update(json.loads(Path(args.config).read_text(encoding="utf-8")))
        except (OSError, json.JSONDecodeError) as exc:
            print(f"config error: field 'config': {exc}", file=sys.stderr)
            return EXIT_CONFIG
    for name in (
        "mode", "xt", "terminal_pose", "v0", "vdot0", "vddot0", "vdddot0",
        "vt", "duration", "samples", "out", "format", "alpha", "beta",
    ):
        value = getattr(args, name, None)
        if value is not None:
            raw[name] = value
    try:
        cfg = _build_config(raw)
        curve = _build_curve(cfg)
    except (ConfigError, ConflictingGoalError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (LogDomainError, AngleNearPiError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    rows = _sample_curve(curve, cfg.samples)
    _write_samples(rows, cfg.out, cfg.format)
    print(f"wrote {len(rows)} rows to {cfg.out}")
    return EXIT_OK


# -- reproduce --------------------------------------------------------------

def _benchmark_motion(name: str) -> interp.InterpolationCurve:
    """Built-in benchmark motions given by polynomial screw coordinates."""
    C0 = Pose.identity()
    if name == "example1":
        # X(t) = (0, 3t^3, t^3, 2t, 0, t), cubic in time
        terms = (
            ([0.0, 0.0, 0.0, 1.0], [0.0, 3.0, 1.0, 0.0, 0.0, 0.0]),
            ([0.0, 1.0], [0.0, 0.0, 0.0, 2.0, 0.0, 1.0]),
        )
    else:
        # X(t) = (-t^4, 0.3t^4, 0.5t^4, 2t^2, 0, t^2), quartic in time
        terms = (
            ([0.0, 0.0, 0.0, 0.0, 1.0], [-1.0, 0.3, 0.5, 0.0, 0.0, 0.0]),
            ([0.0, 0.0, 1.0], [0.0, 0.0, 0.0, 2.0, 0.0, 1.0]),
        )
    return interp.InterpolationCurve(terms, 1.0, C0)


# Terminal twist of the cubic benchmark as published (5 digits).
PUBLISHED_VT_EXAMPLE1 = np.array([0.0, 9.0, 3.0, 4.82629, -1.40384, 5.21152])


def _error_curve_csv(path: Path, report) -> None:
    lines = ["t,rotational,translational,total"]
    a, b = report.weights.alpha, report.weights.beta
    for t, r, y in report.samples:
        lines.append(",".join(_fmt(v) for v in (t, r, y, a * r + b * y)))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def _scalar_geodesic_gap(x_t: np.ndarray) -> float:
    """Independent scalar bound for the geodesic vs minimum-acceleration gap.

    The two curves differ by exp(s(tau) X_T) with s = 3 tau^2 - 2 tau^3 - tau,
    so the rotational gap is max |s| times the rotation-vector norm.
    """
    tau = np.linspace(0.0, 1.0, 200001)
    s = 3.0 * tau**2 - 2.0 * tau**3 - tau
    return float(np.max(np.abs(s)) * np.linalg.norm(x_t[:3]))


def cmd_reproduce(args) -> int:
    name = args.example
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    truth = _benchmark_motion(name)
    T = truth.duration
    C0 = truth.base_pose
    x_t = truth.coordinate(1.0)
    v0 = interp.curve_twist(truth, 0.0)
    vt = interp.curve_twist(truth, T)
    truth_pose = lambda t: interp.curve_eval(truth, t)[1]

    full = interp.bv_tip_cubic(interp.BoundaryData(x_t, v0, vt), T, C0)
    minacc = interp.min_acceleration(x_t, T, C0)
    geo = interp.geodesic(x_t, T, C0)
    full_pose = lambda t: interp.curve_eval(full, t)[1]
    minacc_pose = lambda t: interp.curve_eval(minacc, t)[1]
    geo_pose = lambda t: interp.curve_eval(geo, t)[1]

    rep_full = compare(truth_pose, full_pose, T, N=200)
    rep_minacc = compare(truth_pose, minacc_pose, T, N=200)
    rep_gap = compare(geo_pose, minacc_pose, T, N=200)
    _error_curve_csv(outdir / f"{name}_full_state.csv", rep_full)
    _error_curve_csv(outdir / f"{name}_min_acc.csv", rep_minacc)
    _error_curve_csv(outdir / f"{name}_geodesic_vs_min_acc.csv", rep_gap)

    checks = []
    if name == "example1":
        checks.append(
            {
                "name": "full-state reproduction error",
                "value": rep_full.max_total,
                "threshold": 1e-9,
                "pass": rep_full.max_total <= 1e-9,
            }
        )
        vt_dev = float(np.max(np.abs(vt - PUBLISHED_VT_EXAMPLE1)))
        checks.append(
            {
                "name": "terminal twist vs published 5-digit value",
                "value": vt_dev,
                "threshold": 5e-5,
                "pass": vt_dev <= 5e-5,
            }
        )
        gap_dev = abs(rep_gap.max_rotational - _scalar_geodesic_gap(x_t))
        checks.append(
            {
                "name": "geodesic vs min-acc rotational gap",
                "value": gap_dev,
                "threshold": 1e-3,
                "pass": gap_dev <= 1e-3,
            }
        )
    else:
        endpoint = rep_full.samples[-1]
        endpoint_err = endpoint[1] + endpoint[2]
        interior = max(r + y for _, r, y in rep_full.samples[1:-1])
        checks.append(
            {
                "name": "endpoint error",
                "value": endpoint_err,
                "threshold": 1e-9,
                "pass": endpoint_err <= 1e-9,
            }
        )
        checks.append(
            {
                "name": "interior error strictly positive",
                "value": interior,
                "threshold": 1e-6,
                "pass": interior > 1e-6,
            }
        )

    verdict = "PASS" if all(c["pass"] for c in checks) else "FAIL"
    report = {
        "example": name,
        "terminal_screw": list(x_t),
        "initial_twist": list(v0),
        "terminal_twist_recomputed": list(vt),
        "checks": checks,
        "verdict": verdict,
    }
    if name == "example1":
        report["terminal_twist_published"] = list(PUBLISHED_VT_EXAMPLE1)
    (outdir / f"{name}_report.json").write_text(
        json.dumps(report, indent=2) + "\n", encoding="utf-8", newline="\n"
    )
    for c in checks:
        state = "PASS" if c["pass"] else "FAIL"
        print(f"[{state}] {name}: {c['name']} (value {c['value']:.3e})")
    print(f"{name}: {verdict}")
    return EXIT_OK if verdict == "PASS" else EXIT_INTERNAL


def cmd_validate(args) -> int:
    results = validation.run_suite(args.suite)
    failed = [r for r in results if not r.passed]
    for r in results:
        state = "PASS" if r.passed else "FAIL"
        print(f"[{state}] {r.suite}: {r.name}" + (f" ({r.message})" if r.message else ""))
    return EXIT_OK if not failed else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="screwmotion",
        description="Geometric interpolation of rigid body motions on SE(3)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_int = sub.add_parser("interpolate", help="sample a scheme and export it")
    p_int.add_argument("--config", help="flat key/value JSON file; flags override")
    p_int.add_argument("--mode", choices=MODES)
    p_int.add_argument("--xt", help="terminal screw, 6 comma-separated numbers")
    p_int.add_argument(
        "--terminal-pose",
        dest="terminal_pose",
        help="terminal pose, 12 numbers: R row-major then translation",
    )
    for name in ("v0", "vdot0", "vddot0", "vdddot0", "vt"):
        p_int.add_argument(f"--{name}", help=f"twist field {name}, 6 numbers")
    p_int.add_argument("--duration", type=float)
    p_int.add_argument("--samples", type=int)
    p_int.add_argument("--out")
    p_int.add_argument("--format", choices=("csv", "json"))
    p_int.add_argument("--alpha", type=float)
    p_int.add_argument("--beta", type=float)
    p_int.set_defaults(func=cmd_interpolate)

    p_rep = sub.add_parser("reproduce", help="rerun a built-in benchmark motion")
    p_rep.add_argument("example", choices=("example1", "example2"))
    p_rep.add_argument("--out", required=True, help="output directory")
    p_rep.set_defaults(func=cmd_reproduce)

    p_val = sub.add_parser("validate", help="run invariant suites")
    p_val.add_argument(
        "--suite",
        choices=validation.available_suites() + ["all"],
        default="all",
    )
    p_val.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (LogDomainError, AngleNearPiError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ScrewMotionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
