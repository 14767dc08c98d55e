"""SO(3)/SE(3) primitives: hat/vee maps, exp/log, Lie bracket, adjoints,
the dexp operator and its inverse, and a left-invariant distance.

Conventions
-----------
Screw vectors are flat 6-arrays ordered angular-first:
``(wx, wy, wz, vx, vy, vz)``.  A pose acts on the left, spatial twists are
defined by ``Cdot = hat(V) C``, and ``exp_pose`` maps a screw ``X`` to the
pose ``exp(hat(X))`` with rotation ``exp_rot(w)`` and translation
``dexp_rot(w) @ v``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import AngleNearPiError

__all__ = [
    "ANGLE_CAP",
    "Pose",
    "MetricWeights",
    "DistanceComponents",
    "hat3",
    "vee3",
    "exp_rot",
    "log_rot",
    "dexp_rot",
    "dexpinv_rot",
    "exp_pose",
    "log_pose",
    "bracket",
    "ad_op",
    "dexp_series",
    "dexpinv_series",
    "dexp_closed",
    "dexpinv_closed",
    "distance",
]

# Rotation angles beyond this are rejected by the logarithm (the principal
# log cannot represent angles beyond pi, and the axis degenerates at pi).
ANGLE_CAP = math.pi - 1e-6

# The inverse dexp operator is singular at 2 pi k; angles may legitimately
# exceed pi when a screw coordinate is supplied directly rather than
# produced by the logarithm.
DEXP_ANGLE_CAP = 2.0 * math.pi - 1e-6

# Below this angle all coefficient functions switch to Taylor expansions.
_SMALL = 1e-4

# Bernoulli numbers B_0..B_20 as exact rationals (B_1 = -1/2 convention).
_BERNOULLI = [
    Fraction(1),
    Fraction(-1, 2),
    Fraction(1, 6),
    Fraction(0),
    Fraction(-1, 30),
    Fraction(0),
    Fraction(1, 42),
    Fraction(0),
    Fraction(-1, 30),
    Fraction(0),
    Fraction(5, 66),
    Fraction(0),
    Fraction(-691, 2730),
    Fraction(0),
    Fraction(7, 6),
    Fraction(0),
    Fraction(-3617, 510),
    Fraction(0),
    Fraction(43867, 798),
    Fraction(0),
    Fraction(-174611, 330),
]


def _vec3(v) -> np.ndarray:
    a = np.asarray(v, dtype=float).reshape(3)
    if not np.all(np.isfinite(a)):
        raise ValueError("3-vector has non-finite components")
    return a


def _screw(X) -> np.ndarray:
    a = np.asarray(X, dtype=float).reshape(6)
    if not np.all(np.isfinite(a)):
        raise ValueError("screw vector has non-finite components")
    return a


# -- scalar coefficient functions -------------------------------------------

def _sinc(t: float) -> float:
    """sin(t)/t."""
    if t < _SMALL:
        t2 = t * t
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0
    return math.sin(t) / t


def _cosc(t: float) -> float:
    """(1 - cos(t))/t^2."""
    if t < _SMALL:
        t2 = t * t
        return 0.5 - t2 / 24.0 + t2 * t2 / 720.0
    return (1.0 - math.cos(t)) / (t * t)


def _sincc(t: float) -> float:
    """(t - sin(t))/t^3."""
    if t < _SMALL:
        t2 = t * t
        return 1.0 / 6.0 - t2 / 120.0 + t2 * t2 / 5040.0
    return (t - math.sin(t)) / (t * t * t)


def _dcosc(t: float) -> float:
    """d/dt[(1-cos t)/t^2] / t = (t sin t - 2(1 - cos t))/t^4."""
    if t < _SMALL:
        t2 = t * t
        return -1.0 / 12.0 + t2 / 180.0 - t2 * t2 / 6720.0
    t2 = t * t
    return (t * math.sin(t) - 2.0 * (1.0 - math.cos(t))) / (t2 * t2)


def _dsincc(t: float) -> float:
    """d/dt[(t - sin t)/t^3] / t = (t(1 - cos t) - 3(t - sin t))/t^5."""
    if t < _SMALL:
        t2 = t * t
        return -1.0 / 60.0 + t2 / 1260.0 - t2 * t2 / 60480.0
    t2 = t * t
    return (t * (1.0 - math.cos(t)) - 3.0 * (t - math.sin(t))) / (t2 * t2 * t)


def _invcoef(t: float) -> float:
    """Coefficient of K^2 in dexpinv on SO(3): (1 - (t/2) cot(t/2)) / t^2."""
    if t < _SMALL:
        t2 = t * t
        return 1.0 / 12.0 + t2 / 720.0 + t2 * t2 / 30240.0
    half = 0.5 * t
    return (1.0 - half * math.cos(half) / math.sin(half)) / (t * t)


# -- types ------------------------------------------------------------------

@dataclass(frozen=True)
class Pose:
    """Element of SE(3): a 3x3 rotation and a 3-vector translation."""

    rotation: np.ndarray
    translation: np.ndarray

    def __post_init__(self):
        R = np.asarray(self.rotation, dtype=float).reshape(3, 3)
        p = _vec3(self.translation)
        if not np.all(np.isfinite(R)):
            raise ValueError("rotation has non-finite entries")
        object.__setattr__(self, "rotation", R)
        object.__setattr__(self, "translation", p)

    @staticmethod
    def identity() -> "Pose":
        return Pose(np.eye(3), np.zeros(3))

    @classmethod
    def from_matrix(cls, M, tol: float = 1e-9) -> "Pose":
        M = np.asarray(M, dtype=float).reshape(4, 4)
        R = M[:3, :3]
        check_rotation(R, tol=tol)
        return cls(R, M[:3, 3])

    def matrix(self) -> np.ndarray:
        M = np.eye(4)
        M[:3, :3] = self.rotation
        M[:3, 3] = self.translation
        return M

    def compose(self, other: "Pose") -> "Pose":
        return Pose(
            self.rotation @ other.rotation,
            self.rotation @ other.translation + self.translation,
        )

    def __matmul__(self, other: "Pose") -> "Pose":
        return self.compose(other)

    def inverse(self) -> "Pose":
        Rt = self.rotation.T
        return Pose(Rt, -Rt @ self.translation)

    def adjoint(self) -> np.ndarray:
        """6x6 adjoint mapping body twists to spatial twists."""
        A = np.zeros((6, 6))
        A[:3, :3] = self.rotation
        A[3:, 3:] = self.rotation
        A[3:, :3] = hat3(self.translation) @ self.rotation
        return A

    def orthonormality_defect(self) -> float:
        return float(np.max(np.abs(self.rotation.T @ self.rotation - np.eye(3))))


def check_rotation(R, tol: float = 1e-9) -> np.ndarray:
    """Validate that R is orthonormal with det +1, within tol."""
    R = np.asarray(R, dtype=float).reshape(3, 3)
    if np.max(np.abs(R.T @ R - np.eye(3))) > tol:
        raise ValueError("matrix is not orthonormal within tolerance")
    if abs(np.linalg.det(R) - 1.0) > tol:
        raise ValueError("matrix determinant is not +1 within tolerance")
    return R


@dataclass(frozen=True)
class MetricWeights:
    """Weights of the rotational and translational norm components."""

    alpha: float = 1.0
    beta: float = 1.0

    def __post_init__(self):
        if self.alpha < 0.0 or self.beta < 0.0:
            raise ValueError("metric weights must be non-negative")
        if self.alpha == 0.0 and self.beta == 0.0:
            raise ValueError("metric weights must not both be zero")


@dataclass(frozen=True)
class DistanceComponents:
    rotational: float
    translational: float


# -- hat / vee --------------------------------------------------------------

def hat3(v) -> np.ndarray:
    """Map a 3-vector to the corresponding skew-symmetric matrix."""
    x, y, z = _vec3(v)
    return np.array([[0.0, -z, y], [z, 0.0, -x], [-y, x, 0.0]])


def vee3(M, tol: float = 1e-9) -> np.ndarray:
    """Inverse of hat3; rejects matrices that are not skew-symmetric."""
    M = np.asarray(M, dtype=float).reshape(3, 3)
    if np.max(np.abs(M + M.T)) > tol:
        raise ValueError("matrix is not skew-symmetric within tolerance")
    return np.array([M[2, 1], M[0, 2], M[1, 0]])


# -- exp / log on SO(3) -----------------------------------------------------

def exp_rot(omega) -> np.ndarray:
    """Rotation matrix exp of a rotation vector (Rodrigues formula)."""
    w = _vec3(omega)
    th = float(np.linalg.norm(w))
    K = hat3(w)
    return np.eye(3) + _sinc(th) * K + _cosc(th) * (K @ K)


def log_rot(R) -> np.ndarray:
    """Rotation vector log of a rotation matrix; angle capped below pi."""
    R = np.asarray(R, dtype=float).reshape(3, 3)
    c = max(-1.0, min(1.0, 0.5 * (np.trace(R) - 1.0)))
    th = math.acos(c)
    if th > ANGLE_CAP:
        raise AngleNearPiError(f"rotation angle {th:.9f} exceeds pi - 1e-6")
    skew = 0.5 * (R - R.T)
    w = np.array([skew[2, 1], skew[0, 2], skew[1, 0]])  # sin(th) * axis
    if th < _SMALL:
        # th/sin(th) ~ 1 + th^2/6 + 7 th^4/360
        return w * (1.0 + th * th / 6.0 + 7.0 * th ** 4 / 360.0)
    if th > math.pi - 1e-3:
        # Near pi the skew part degenerates; take the axis from the
        # symmetric part and fix the sign from the skew part.
        S = 0.5 * (R + R.T)
        outer = (S - c * np.eye(3)) / (1.0 - c)  # axis outer product
        i = int(np.argmax(np.diag(outer)))
        axis = outer[:, i] / math.sqrt(outer[i, i])
        if np.dot(axis, w) < 0.0:
            axis = -axis
        return th * axis
    return w * (th / math.sin(th))


# -- dexp on SO(3) ----------------------------------------------------------

def dexp_rot(omega) -> np.ndarray:
    """Right-trivialized differential of exp on SO(3), closed form."""
    w = _vec3(omega)
    th = float(np.linalg.norm(w))
    K = hat3(w)
    return np.eye(3) + _cosc(th) * K + _sincc(th) * (K @ K)


def dexpinv_rot(omega) -> np.ndarray:
    """Inverse of dexp_rot; singular at 2 pi k, capped below 2 pi."""
    w = _vec3(omega)
    th = float(np.linalg.norm(w))
    if th > DEXP_ANGLE_CAP:
        raise AngleNearPiError(f"rotation angle {th:.9f} exceeds 2 pi - 1e-6")
    K = hat3(w)
    return np.eye(3) - 0.5 * K + _invcoef(th) * (K @ K)


# -- exp / log on SE(3) -----------------------------------------------------

def exp_pose(X) -> Pose:
    """Pose exp of a screw vector."""
    X = _screw(X)
    w, v = X[:3], X[3:]
    return Pose(exp_rot(w), dexp_rot(w) @ v)


def log_pose(C: Pose) -> np.ndarray:
    """Screw vector log of a pose; rotation angle capped below pi."""
    w = log_rot(C.rotation)
    v = dexpinv_rot(w) @ C.translation
    return np.concatenate([w, v])


# -- se(3) algebra ----------------------------------------------------------

def bracket(X, Y) -> np.ndarray:
    """Lie bracket (screw product) on se(3)."""
    X, Y = _screw(X), _screw(Y)
    wx, vx = X[:3], X[3:]
    wy, vy = Y[:3], Y[3:]
    return np.concatenate([np.cross(wx, wy), np.cross(wx, vy) + np.cross(vx, wy)])


def ad_op(X) -> np.ndarray:
    """6x6 matrix of ad_X, i.e. ad_op(X) @ Y == bracket(X, Y)."""
    X = _screw(X)
    W = hat3(X[:3])
    A = np.zeros((6, 6))
    A[:3, :3] = W
    A[3:, 3:] = W
    A[3:, :3] = hat3(X[3:])
    return A


# -- dexp on SE(3) ----------------------------------------------------------

def dexp_series(X, N: int) -> np.ndarray:
    """Partial sum sum_{i<=N} ad_X^i / (i+1)! of the dexp series."""
    if N < 0:
        raise ValueError("N must be non-negative")
    A = ad_op(X)
    P = np.eye(6)
    out = np.zeros((6, 6))
    for i in range(N + 1):
        out += P / math.factorial(i + 1)
        P = A @ P
    return out


def dexpinv_series(X, N: int) -> np.ndarray:
    """Partial sum sum_{i<=N} (B_i / i!) ad_X^i of the dexp inverse series."""
    if N < 0:
        raise ValueError("N must be non-negative")
    if N >= len(_BERNOULLI):
        raise ValueError(f"Bernoulli numbers tabulated to i={len(_BERNOULLI) - 1}")
    A = ad_op(X)
    P = np.eye(6)
    out = np.zeros((6, 6))
    for i in range(N + 1):
        b = _BERNOULLI[i]
        if b != 0:
            out += (float(b) / math.factorial(i)) * P
        P = A @ P
    return out


def _dexp_blocks(X) -> tuple[np.ndarray, np.ndarray]:
    """Diagonal and lower-left 3x3 blocks of the SE(3) dexp matrix.

    The lower-left block is the directional derivative of dexp_rot(w)
    along v, which follows from ad_X being block lower-triangular.
    """
    X = _screw(X)
    w, v = X[:3], X[3:]
    th = float(np.linalg.norm(w))
    K = hat3(w)
    Vh = hat3(v)
    D = np.eye(3) + _cosc(th) * K + _sincc(th) * (K @ K)
    C = _cosc(th) * Vh + _sincc(th) * (K @ Vh + Vh @ K)
    dot = float(np.dot(w, v))
    if dot != 0.0:
        C = C + dot * (_dcosc(th) * K + _dsincc(th) * (K @ K))
    return D, C


def dexp_closed(X) -> np.ndarray:
    """Closed-form 6x6 dexp on SE(3); matches the N=20 series."""
    D, C = _dexp_blocks(X)
    out = np.zeros((6, 6))
    out[:3, :3] = D
    out[3:, 3:] = D
    out[3:, :3] = C
    return out


def dexpinv_closed(X) -> np.ndarray:
    """Closed-form 6x6 inverse dexp on SE(3); angle capped below 2 pi."""
    X = _screw(X)
    th = float(np.linalg.norm(X[:3]))
    if th > DEXP_ANGLE_CAP:
        raise AngleNearPiError(f"rotation angle {th:.9f} exceeds 2 pi - 1e-6")
    D, C = _dexp_blocks(X)
    Dinv = dexpinv_rot(X[:3])
    out = np.zeros((6, 6))
    out[:3, :3] = Dinv
    out[3:, 3:] = Dinv
    out[3:, :3] = -Dinv @ C @ Dinv
    return out


# -- left-invariant distance ------------------------------------------------

def distance(
    C1: Pose, C2: Pose, w: MetricWeights | None = None
) -> tuple[float, DistanceComponents]:
    """Left-invariant distance between two poses.

    Returns ``alpha * |x| + beta * |y|`` together with the two components,
    where ``x`` is the rotation log of the relative pose and
    ``y = dexpinv_rot(x) @ r`` with relative translation ``r``.
    """
    if w is None:
        w = MetricWeights()
    Rrel = C1.rotation.T @ C2.rotation
    rrel = C1.rotation.T @ (C2.translation - C1.translation)
    x = log_rot(Rrel)
    y = dexpinv_rot(x) @ rrel
    comps = DistanceComponents(float(np.linalg.norm(x)), float(np.linalg.norm(y)))
    return w.alpha * comps.rotational + w.beta * comps.translational, comps
