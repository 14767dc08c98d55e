"""Geometric interpolation of rigid body motions on SE(3).

Screw vectors are flat 6-arrays ordered angular-first:
``(wx, wy, wz, vx, vy, vz)``.
"""

from .errors import (
    AngleNearPiError,
    BadOrderError,
    ConflictingGoalError,
    InsufficientJetError,
    LogDomainError,
    OutOfDomainError,
    ScrewMotionError,
)
from .estimators import (
    BoundaryValueInterpolator,
    GeodesicInterpolator,
    InitialValueInterpolator,
    MinimumAccelerationInterpolator,
)
from .interp import (
    BoundaryData,
    InterpolationCurve,
    body_fixed_variant,
    bv_tip_cubic,
    cubic_terminal_twist,
    curve_eval,
    curve_twist,
    geodesic,
    iv_tip,
    min_acceleration,
    resolve_terminal,
)
from .liecore import (
    DistanceComponents,
    MetricWeights,
    Pose,
    ad_op,
    bracket,
    dexp_closed,
    dexp_series,
    dexpinv_closed,
    dexpinv_series,
    distance,
    exp_pose,
    exp_rot,
    hat3,
    log_pose,
    log_rot,
    vee3,
)
from .magnus import (
    MagnusCoefficients,
    TwistJet,
    compositions,
    eval_series,
    magnus_coefficients,
    x3_closed,
    x4_closed,
)
from .oracle import ComparisonReport, compare, finite_diff_twist, integrate_reconstruction

__version__ = "0.1.0"

__all__ = [
    "AngleNearPiError",
    "BadOrderError",
    "ConflictingGoalError",
    "InsufficientJetError",
    "LogDomainError",
    "OutOfDomainError",
    "ScrewMotionError",
    "BoundaryValueInterpolator",
    "GeodesicInterpolator",
    "InitialValueInterpolator",
    "MinimumAccelerationInterpolator",
    "BoundaryData",
    "InterpolationCurve",
    "body_fixed_variant",
    "bv_tip_cubic",
    "cubic_terminal_twist",
    "curve_eval",
    "curve_twist",
    "geodesic",
    "iv_tip",
    "min_acceleration",
    "resolve_terminal",
    "DistanceComponents",
    "MetricWeights",
    "Pose",
    "ad_op",
    "bracket",
    "dexp_closed",
    "dexp_series",
    "dexpinv_closed",
    "dexpinv_series",
    "distance",
    "exp_pose",
    "exp_rot",
    "hat3",
    "log_pose",
    "log_rot",
    "vee3",
    "MagnusCoefficients",
    "TwistJet",
    "compositions",
    "eval_series",
    "magnus_coefficients",
    "x3_closed",
    "x4_closed",
    "ComparisonReport",
    "compare",
    "finite_diff_twist",
    "integrate_reconstruction",
]
