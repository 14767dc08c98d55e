"""Interpolation schemes for rigid body motions.

All schemes produce an ``InterpolationCurve``: a finite sum of scalar
polynomials in the normalized time tau = t/T, each multiplying a constant
screw vector.  The pose along the curve is ``exp_pose(X(tau)) C0``.

Internally the formulas work with normalized twists
``Vbar^(i) = T^(i+1) V^(i)``; public entry points take physical time T and
physical twists and normalize at the boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import (
    BadOrderError,
    ConflictingGoalError,
    InsufficientJetError,
    LogDomainError,
    OutOfDomainError,
)
from .liecore import (
    DEXP_ANGLE_CAP,
    Pose,
    _screw,
    bracket,
    dexp_closed,
    dexpinv_closed,
    exp_pose,
    log_pose,
)
from .magnus import TwistJet

__all__ = [
    "InterpolationCurve",
    "BoundaryData",
    "resolve_terminal",
    "geodesic",
    "iv_tip",
    "cubic_terminal_twist",
    "bv_tip_cubic",
    "min_acceleration",
    "curve_eval",
    "curve_twist",
    "body_fixed_variant",
]


@dataclass(frozen=True)
class InterpolationCurve:
    """Sum of (scalar polynomial in tau) x (constant screw) terms.

    ``terms`` holds (ascending polynomial coefficients, screw) pairs;
    every polynomial vanishes at tau = 0.
    """

    terms: tuple[tuple[np.ndarray, np.ndarray], ...]
    duration: float
    base_pose: Pose

    def __post_init__(self):
        if self.duration <= 0.0:
            raise ValueError("curve duration must be positive")
        coerced = []
        for poly, screw in self.terms:
            poly = np.atleast_1d(np.asarray(poly, dtype=float))
            coerced.append((poly, _screw(screw)))
        object.__setattr__(self, "terms", tuple(coerced))

    def coordinate(self, tau: float) -> np.ndarray:
        """X(tau)."""
        out = np.zeros(6)
        for poly, screw in self.terms:
            out = out + float(P.polyval(tau, poly)) * screw
        return out

    def coordinate_derivative(self, tau: float) -> np.ndarray:
        """dX/dtau at tau."""
        out = np.zeros(6)
        for poly, screw in self.terms:
            out = out + float(P.polyval(tau, P.polyder(poly))) * screw
        return out

    def polynomial_coefficients(self) -> np.ndarray:
        """Collapse all terms to one (degree+1, 6) coefficient array in tau."""
        deg = max(len(poly) for poly, _ in self.terms)
        out = np.zeros((deg, 6))
        for poly, screw in self.terms:
            out[: len(poly)] += np.outer(poly, screw)
        return out


@dataclass(frozen=True)
class BoundaryData:
    """Boundary conditions of a BV interpolation.

    ``x_t`` is the log of the relative terminal pose, ``v0``/``vt`` are the
    physical spatial twists at t = 0 and t = T.  Higher derivatives at
    t = 0 are accepted for forward compatibility but unused by the cubic.
    """

    x_t: np.ndarray
    v0: np.ndarray
    vt: np.ndarray
    higher_derivatives: tuple[np.ndarray, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "x_t", _check_log_domain(self.x_t))
        object.__setattr__(self, "v0", _screw(self.v0))
        object.__setattr__(self, "vt", _screw(self.vt))
        object.__setattr__(
            self,
            "higher_derivatives",
            tuple(_screw(d) for d in self.higher_derivatives),
        )


def _check_log_domain(x_t) -> np.ndarray:
    # A directly supplied screw coordinate may carry a rotation angle
    # beyond pi; the hard limit is the dexp inverse singularity at 2 pi.
    x_t = _screw(x_t)
    if float(np.linalg.norm(x_t[:3])) > DEXP_ANGLE_CAP:
        raise LogDomainError(
            "terminal screw rotation angle exceeds 2 pi - 1e-6"
        )
    return x_t


def resolve_terminal(
    base_pose: Pose,
    x_t=None,
    terminal_pose: Pose | None = None,
    tol: float = 1e-8,
) -> np.ndarray:
    """Terminal screw coordinate from either X_T or a terminal pose.

    If both are given they must agree within tol, otherwise
    ``ConflictingGoalError`` is raised.
    """
    if x_t is None and terminal_pose is None:
        raise ValueError("either x_t or terminal_pose is required")
    if terminal_pose is not None:
        from_pose = log_pose(terminal_pose @ base_pose.inverse())
        if x_t is not None:
            if float(np.max(np.abs(_screw(x_t) - from_pose))) > tol:
                raise ConflictingGoalError(
                    "terminal pose and terminal screw coordinate disagree"
                )
        return _check_log_domain(from_pose)
    return _check_log_domain(x_t)


def geodesic(X_T, T: float, C0: Pose) -> InterpolationCurve:
    """Shortest-path motion exp(tau X_T) C0."""
    return InterpolationCurve((([0.0, 1.0], _screw(X_T)),), T, C0)


def _jet_screws(jet) -> list[np.ndarray]:
    if jet is None:
        return []
    if isinstance(jet, TwistJet):
        return list(jet.derivatives)
    return [_screw(d) for d in jet]


def iv_tip(k: int, X_T, T: float, jet, C0: Pose) -> InterpolationCurve:
    """kth-order initial value interpolation, k = 1..4.

    ``jet`` supplies exactly the k-1 twist derivatives V(0)..V^(k-2)(0);
    for k = 1 it is empty (or None).  The curve hits X_T at t = T exactly
    and matches the prescribed initial twist data.
    """
    if k < 1 or k > 4:
        raise BadOrderError(f"initial value interpolation supports k = 1..4, got {k}")
    X_T = _check_log_domain(X_T)
    vs = _jet_screws(jet)
    if len(vs) != k - 1:
        raise InsufficientJetError(
            f"order {k} needs exactly {k - 1} jet entries, got {len(vs)}"
        )
    vbar = [T ** (i + 1) * v for i, v in enumerate(vs)]
    terms: list[tuple[list[float], np.ndarray]] = []
    if k == 1:
        terms.append(([0.0, 1.0], X_T))
    elif k == 2:
        terms.append(([0.0, 0.0, 1.0], X_T))
        terms.append(([0.0, 1.0, -1.0], vbar[0]))
    elif k == 3:
        terms.append(([0.0, 0.0, 0.0, 1.0], X_T))
        terms.append(([0.0, 1.0, 0.0, -1.0], vbar[0]))
        terms.append(([0.0, 0.0, 0.5, -0.5], vbar[1]))
    else:
        w = vbar[2] + 0.5 * bracket(vbar[1], vbar[0])
        terms.append(([0.0, 0.0, 0.0, 0.0, 1.0], X_T))
        terms.append(([0.0, 1.0, 0.0, 0.0, -1.0], vbar[0]))
        terms.append(([0.0, 0.0, 0.5, 0.0, -0.5], vbar[1]))
        terms.append(([0.0, 0.0, 0.0, 1.0 / 6.0, -1.0 / 6.0], w))
    return InterpolationCurve(tuple(terms), T, C0)


def cubic_terminal_twist(X_T, T: float, V0, Vdot0) -> np.ndarray:
    """Physical terminal twist of the cubic initial value interpolant.

    Implements Vbar_T = dexp_{X_T}(3 X_T - 2 Vbar_0 - Vbar_dot_0 / 2) and
    returns V_T = Vbar_T / T.
    """
    if T <= 0.0:
        raise ValueError("duration must be positive")
    X_T = _screw(X_T)
    vbar0 = T * _screw(V0)
    vbardot0 = T * T * _screw(Vdot0)
    return dexp_closed(X_T) @ (3.0 * X_T - 2.0 * vbar0 - 0.5 * vbardot0) / T


def bv_tip_cubic(b: BoundaryData, T: float, C0: Pose) -> InterpolationCurve:
    """Cubic interpolation with prescribed initial and terminal twist.

    X(tau) = (3 tau^2 - 2 tau^3) X_T + tau (1 - tau)^2 Vbar_0
             + tau^2 (tau - 1) dexpinv_{X_T} Vbar_T
    """
    if T <= 0.0:
        raise ValueError("duration must be positive")
    X_T = b.x_t
    vbar0 = T * b.v0
    wbar = dexpinv_closed(X_T) @ (T * b.vt)
    terms = (
        ([0.0, 0.0, 3.0, -2.0], X_T),
        ([0.0, 1.0, -2.0, 1.0], vbar0),
        ([0.0, 0.0, -1.0, 1.0], wbar),
    )
    return InterpolationCurve(terms, T, C0)


def min_acceleration(X_T, T: float, C0: Pose) -> InterpolationCurve:
    """Minimum acceleration curve (3 tau^2 - 2 tau^3) X_T.

    Equals the cubic boundary value interpolation with both twists zero;
    same geometric path as the geodesic, different timing.
    """
    X_T = _check_log_domain(X_T)
    return InterpolationCurve((([0.0, 0.0, 3.0, -2.0], X_T),), T, C0)


def _check_time(c: InterpolationCurve, t: float) -> float:
    slack = 1e-9 * max(1.0, c.duration)
    if t < -slack or t > c.duration + slack:
        raise OutOfDomainError(f"t = {t} outside [0, {c.duration}]")
    return min(max(t, 0.0), c.duration)


def curve_eval(c: InterpolationCurve, t: float) -> tuple[np.ndarray, Pose]:
    """Screw coordinate X(t/T) and pose exp_pose(X) C0 at time t."""
    t = _check_time(c, t)
    X = c.coordinate(t / c.duration)
    return X, exp_pose(X) @ c.base_pose


def curve_twist(c: InterpolationCurve, t: float) -> np.ndarray:
    """Spatial twist V = dexp_X Xdot at time t (analytic derivative)."""
    t = _check_time(c, t)
    tau = t / c.duration
    X = c.coordinate(tau)
    Xdot = c.coordinate_derivative(tau) / c.duration
    return dexp_closed(X) @ Xdot


def body_fixed_variant(c: InterpolationCurve) -> InterpolationCurve:
    """Negate every screw term.

    The result is meant to be read under the left (body-fixed) convention
    Cdot = C hat(V_b); applying the map twice returns the original curve.
    """
    terms = tuple((poly.copy(), -screw) for poly, screw in c.terms)
    return InterpolationCurve(terms, c.duration, c.base_pose)
