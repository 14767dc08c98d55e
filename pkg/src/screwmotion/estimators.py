"""Estimator-style front end for the interpolation schemes.

The classes follow scikit-learn conventions (constructor hyperparameters,
``get_params``/``set_params``, fitted attributes with trailing underscore,
``NotFittedError`` before fitting) so curves compose with the wider
ecosystem.  ``fit`` takes boundary poses and twists rather than an (X, y)
design matrix; ``predict`` maps times to 4x4 pose matrices.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from . import interp
from .liecore import Pose, log_pose

__all__ = [
    "GeodesicInterpolator",
    "MinimumAccelerationInterpolator",
    "InitialValueInterpolator",
    "BoundaryValueInterpolator",
]


def as_pose(x) -> Pose:
    """Coerce a Pose or a 4x4 homogeneous matrix to a Pose."""
    if isinstance(x, Pose):
        return x
    return Pose.from_matrix(np.asarray(x, dtype=float))


class _CurveEstimator(BaseEstimator):
    """Shared predict machinery; subclasses implement fit."""

    curve_: interp.InterpolationCurve

    def _fitted_curve(self) -> interp.InterpolationCurve:
        if not hasattr(self, "curve_"):
            raise NotFittedError(
                f"This {type(self).__name__} instance is not fitted yet."
            )
        return self.curve_

    def _relative_goal(self, start, end) -> tuple[Pose, np.ndarray]:
        # curves are exp(X(tau)) C0, so the goal screw is log(C_T C0^-1)
        C0 = as_pose(start)
        X_T = log_pose(as_pose(end) @ C0.inverse())
        return C0, X_T

    def predict(self, times) -> np.ndarray:
        """Pose matrices along the curve, shape (n, 4, 4)."""
        c = self._fitted_curve()
        times = np.atleast_1d(np.asarray(times, dtype=float))
        return np.stack([interp.curve_eval(c, t)[1].matrix() for t in times])

    def predict_twist(self, times) -> np.ndarray:
        """Spatial twists along the curve, shape (n, 6)."""
        c = self._fitted_curve()
        times = np.atleast_1d(np.asarray(times, dtype=float))
        return np.stack([interp.curve_twist(c, t) for t in times])


class GeodesicInterpolator(_CurveEstimator):
    """Shortest-path motion between two poses."""

    def __init__(self, duration: float = 1.0):
        self.duration = duration

    def fit(self, start, end):
        C0, X_T = self._relative_goal(start, end)
        self.curve_ = interp.geodesic(X_T, self.duration, C0)
        return self


class MinimumAccelerationInterpolator(_CurveEstimator):
    """Zero-boundary-twist cubic; geodesic path with smooth-step timing."""

    def __init__(self, duration: float = 1.0):
        self.duration = duration

    def fit(self, start, end):
        C0, X_T = self._relative_goal(start, end)
        self.curve_ = interp.min_acceleration(X_T, self.duration, C0)
        return self


class InitialValueInterpolator(_CurveEstimator):
    """kth-order interpolation matching the initial twist jet, k = 1..4."""

    def __init__(self, order: int = 3, duration: float = 1.0):
        self.order = order
        self.duration = duration

    def fit(self, start, end, v0=None, vdot0=None, vddot0=None):
        C0, X_T = self._relative_goal(start, end)
        jet = [v for v in (v0, vdot0, vddot0) if v is not None]
        self.curve_ = interp.iv_tip(self.order, X_T, self.duration, jet, C0)
        return self


class BoundaryValueInterpolator(_CurveEstimator):
    """Cubic interpolation with prescribed initial and terminal twist."""

    def __init__(self, duration: float = 1.0):
        self.duration = duration

    def fit(self, start, end, v0=None, vt=None):
        C0, X_T = self._relative_goal(start, end)
        v0 = np.zeros(6) if v0 is None else np.asarray(v0, dtype=float)
        vt = np.zeros(6) if vt is None else np.asarray(vt, dtype=float)
        data = interp.BoundaryData(X_T, v0, vt)
        self.curve_ = interp.bv_tip_cubic(data, self.duration, C0)
        return self
