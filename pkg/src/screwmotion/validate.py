"""Named invariant suites behind the ``validate`` CLI command.

Each check raises AssertionError on violation; the runner reports the
first failing invariant by name.  Randomized checks draw from a fixed
seed (overridable through SCREWMOTION_SEED) so runs are reproducible.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from . import interp, liecore, magnus, oracle

__all__ = ["CheckResult", "available_suites", "run_suite"]

DEFAULT_SEED = 42


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    message: str = ""


def _seed() -> int:
    return int(os.environ.get("SCREWMOTION_SEED", DEFAULT_SEED))


def _rng() -> np.random.Generator:
    return np.random.default_rng(_seed())


def _random_screw(rng, max_angle=2.0):
    w = rng.normal(size=3)
    w *= rng.uniform(0.0, max_angle) / np.linalg.norm(w)
    return np.concatenate([w, rng.uniform(-1.0, 1.0, 3)])


def _random_pose(rng, max_angle=2.0):
    return liecore.exp_pose(_random_screw(rng, max_angle))


# -- lie suite --------------------------------------------------------------

def _check_rot_roundtrip(rng):
    for _ in range(100):
        w = rng.normal(size=3)
        w *= rng.uniform(0.0, math.pi - 1e-3) / np.linalg.norm(w)
        back = liecore.log_rot(liecore.exp_rot(w))
        assert np.max(np.abs(back - w)) < 1e-9


def _check_pose_roundtrip(rng):
    for _ in range(100):
        X = _random_screw(rng, max_angle=math.pi - 1e-3)
        back = liecore.log_pose(liecore.exp_pose(X))
        assert np.max(np.abs(back - X)) < 1e-9


def _check_dexp_inverse(rng):
    for _ in range(100):
        X = _random_screw(rng, max_angle=math.pi - 1e-3)
        P = liecore.dexp_closed(X) @ liecore.dexpinv_closed(X)
        assert np.max(np.abs(P - np.eye(6))) < 1e-12


def _check_dexp_series_vs_closed(rng):
    for _ in range(100):
        X = _random_screw(rng, max_angle=2.0)
        diff = liecore.dexp_series(X, 20) - liecore.dexp_closed(X)
        assert np.max(np.abs(diff)) < 1e-12


def _check_jacobi(rng):
    for _ in range(100):
        X, Y, Z = (rng.uniform(-1.0, 1.0, 6) for _ in range(3))
        s = (
            liecore.bracket(X, liecore.bracket(Y, Z))
            + liecore.bracket(Y, liecore.bracket(Z, X))
            + liecore.bracket(Z, liecore.bracket(X, Y))
        )
        assert np.max(np.abs(s)) < 1e-12


def _check_distance_left_invariance(rng):
    for _ in range(50):
        C1, C2 = _random_pose(rng, 1.2), _random_pose(rng, 1.2)
        A = _random_pose(rng, 1.2)
        d, c = liecore.distance(C1, C2)
        dA, cA = liecore.distance(A @ C1, A @ C2)
        assert abs(d - dA) < 1e-10
        assert abs(c.rotational - cA.rotational) < 1e-10
        assert abs(c.translational - cA.translational) < 1e-10


def _check_fd_twist_order(rng):
    X_T = np.array([0.4, -0.3, 0.5, 1.0, 0.2, -0.6])
    v0 = np.array([0.3, 0.1, -0.2, 0.5, -0.4, 0.2])
    vdot0 = np.array([-0.2, 0.4, 0.1, 0.3, 0.2, -0.1])
    curve = interp.iv_tip(3, X_T, 1.0, [v0, vdot0], liecore.Pose.identity())
    pose = lambda t: interp.curve_eval(curve, t)[1]
    truth = interp.curve_twist(curve, 0.4)
    e1 = np.max(np.abs(oracle.finite_diff_twist(pose, 0.4, 1e-3) - truth))
    e2 = np.max(np.abs(oracle.finite_diff_twist(pose, 0.4, 5e-4) - truth))
    assert 3.8 < e1 / e2 < 4.2


# -- magnus suite -----------------------------------------------------------

def _check_recursion_vs_cubic(rng):
    for _ in range(50):
        jet = [rng.uniform(-1.0, 1.0, 6) for _ in range(3)]
        coeffs = magnus.magnus_coefficients(jet, 3)
        for t in rng.uniform(0.0, 1.0, 5):
            a = magnus.eval_series(coeffs, t)
            b = magnus.x3_closed(jet, t)
            assert np.max(np.abs(a - b)) < 1e-13


def _check_recursion_vs_quartic(rng):
    for _ in range(50):
        jet = [rng.uniform(-1.0, 1.0, 6) for _ in range(4)]
        coeffs = magnus.magnus_coefficients(jet, 4)
        for t in rng.uniform(0.0, 1.0, 5):
            a = magnus.eval_series(coeffs, t)
            b = magnus.x4_closed(jet, t)
            assert np.max(np.abs(a - b)) < 1e-13


def _check_constant_twist_collapse(rng):
    for k in range(1, 7):
        v = rng.uniform(-1.0, 1.0, 6)
        jet = [v] + [np.zeros(6)] * (k - 1)
        coeffs = magnus.magnus_coefficients(jet, k)
        for t in (0.3, 1.0, 2.5):
            assert np.max(np.abs(magnus.eval_series(coeffs, t) - t * v)) < 1e-13


# -- interp suite -----------------------------------------------------------

def _check_endpoint_exactness(rng):
    C0 = _random_pose(rng, 1.0)
    X_T = _random_screw(rng, 1.5)
    for k in (1, 2, 3, 4):
        jet = [rng.uniform(-1.0, 1.0, 6) for _ in range(k - 1)]
        c = interp.iv_tip(k, X_T, 2.0, jet, C0)
        assert np.max(np.abs(c.coordinate(0.0))) < 1e-13
        assert np.max(np.abs(c.coordinate(1.0) - X_T)) < 1e-13
    b = interp.BoundaryData(X_T, rng.uniform(-1, 1, 6), rng.uniform(-1, 1, 6))
    c = interp.bv_tip_cubic(b, 2.0, C0)
    assert np.max(np.abs(c.coordinate(0.0))) < 1e-13
    assert np.max(np.abs(c.coordinate(1.0) - X_T)) < 1e-13


def _check_boundary_twist_matching(rng):
    T = 1.5
    C0 = _random_pose(rng, 1.0)
    X_T = _random_screw(rng, 1.5)
    v0 = rng.uniform(-1.0, 1.0, 6)
    vt = rng.uniform(-1.0, 1.0, 6)
    c = interp.bv_tip_cubic(interp.BoundaryData(X_T, v0, vt), T, C0)
    assert np.max(np.abs(interp.curve_twist(c, 0.0) - v0)) < 1e-12
    assert np.max(np.abs(interp.curve_twist(c, T) - vt)) < 1e-10
    # finite differences of the pose curve agree with the prescription
    pose = lambda t: interp.curve_eval(c, t)[1]
    h = 1e-5
    fd0 = oracle.finite_diff_twist(pose, h, h)
    assert np.max(np.abs(fd0 - v0)) < 1e-4
    fdT = oracle.finite_diff_twist(pose, T - h, h)
    assert np.max(np.abs(fdT - vt)) < 1e-4


def _check_cubic_reproduction(rng):
    for _ in range(10):
        truth = interp.InterpolationCurve(
            tuple(([0.0] * (i + 1) + [1.0], 0.5 * rng.uniform(-1, 1, 6)) for i in range(3)),
            1.0,
            liecore.Pose.identity(),
        )
        b = interp.BoundaryData(
            truth.coordinate(1.0),
            interp.curve_twist(truth, 0.0),
            interp.curve_twist(truth, 1.0),
        )
        c = interp.bv_tip_cubic(b, 1.0, liecore.Pose.identity())
        rep = oracle.compare(
            lambda t: interp.curve_eval(truth, t)[1],
            lambda t: interp.curve_eval(c, t)[1],
            1.0,
            N=50,
        )
        assert rep.max_total < 1e-9


def _check_elimination_consistency(rng):
    T = 1.3
    C0 = liecore.Pose.identity()
    for _ in range(10):
        X_T = _random_screw(rng, 1.5)
        v0 = rng.uniform(-1.0, 1.0, 6)
        vdot0 = rng.uniform(-1.0, 1.0, 6)
        vt = interp.cubic_terminal_twist(X_T, T, v0, vdot0)
        c_iv = interp.iv_tip(3, X_T, T, [v0, vdot0], C0)
        c_bv = interp.bv_tip_cubic(interp.BoundaryData(X_T, v0, vt), T, C0)
        diff = c_iv.polynomial_coefficients() - c_bv.polynomial_coefficients()
        assert np.max(np.abs(diff)) < 1e-12


def _check_min_acc_reduction(rng):
    X_T = _random_screw(rng, 1.5)
    b = interp.BoundaryData(X_T, np.zeros(6), np.zeros(6))
    c = interp.bv_tip_cubic(b, 1.0, liecore.Pose.identity())
    expected = np.outer([0.0, 0.0, 3.0, -2.0], X_T)
    assert np.max(np.abs(c.polynomial_coefficients() - expected)) < 1e-14


_SUITES = {
    "lie": [
        ("exp/log rotation round-trip", _check_rot_roundtrip),
        ("exp/log pose round-trip", _check_pose_roundtrip),
        ("dexp inverse identity", _check_dexp_inverse),
        ("dexp series vs closed form", _check_dexp_series_vs_closed),
        ("bracket Jacobi identity", _check_jacobi),
        ("distance left-invariance", _check_distance_left_invariance),
        ("finite-difference twist order", _check_fd_twist_order),
    ],
    "magnus": [
        ("recursion vs cubic closed form", _check_recursion_vs_cubic),
        ("recursion vs quartic closed form", _check_recursion_vs_quartic),
        ("constant twist collapse", _check_constant_twist_collapse),
    ],
    "interp": [
        ("endpoint exactness", _check_endpoint_exactness),
        ("boundary twist matching", _check_boundary_twist_matching),
        ("cubic polynomial reproduction", _check_cubic_reproduction),
        ("elimination consistency", _check_elimination_consistency),
        ("minimum-acceleration reduction", _check_min_acc_reduction),
    ],
}


def available_suites() -> list[str]:
    return list(_SUITES)


def run_suite(name: str) -> list[CheckResult]:
    """Run one suite ('lie', 'magnus', 'interp') or 'all'."""
    if name == "all":
        names = available_suites()
    elif name in _SUITES:
        names = [name]
    else:
        raise ValueError(f"unknown suite {name!r}")
    results = []
    for suite in names:
        for check_name, fn in _SUITES[suite]:
            try:
                fn(_rng())
                results.append(CheckResult(suite, check_name, True))
            except Exception as exc:  # report, do not abort remaining checks
                results.append(CheckResult(suite, check_name, False, str(exc)))
    return results
