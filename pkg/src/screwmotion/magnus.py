"""Series solution of the kinematic reconstruction ODE on se(3).

Given the spatial twist and its time derivatives at t = 0 (a twist jet),
the coefficients of the screw coordinate series X(t) = sum t^i/i! X_i are
computed by a recursion over ordered integer compositions of nested-bracket
multidegrees.  The closed third- and fourth-order solutions are provided
for cross-validation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import InsufficientJetError
from .liecore import bracket, _screw

__all__ = [
    "MAX_ORDER",
    "TwistJet",
    "MagnusCoefficients",
    "Composition",
    "compositions",
    "magnus_coefficients",
    "eval_series",
    "x3_closed",
    "x4_closed",
]

# Hard cap on the recursion order; the number of composition terms grows
# too fast to be useful beyond this.
MAX_ORDER = 12

Composition = tuple[int, ...]


@dataclass(frozen=True)
class TwistJet:
    """Spatial twist and its time derivatives at t = 0.

    ``derivatives[i]`` holds d^i V / dt^i at t = 0; the jet order is the
    number of entries.
    """

    derivatives: tuple[np.ndarray, ...]

    def __post_init__(self):
        if len(self.derivatives) == 0:
            raise ValueError("twist jet must hold at least the twist itself")
        object.__setattr__(
            self, "derivatives", tuple(_screw(d) for d in self.derivatives)
        )

    @property
    def order(self) -> int:
        return len(self.derivatives)


@dataclass(frozen=True)
class MagnusCoefficients:
    """Series coefficients X_1..X_k (X_0 = 0 is implicit)."""

    coefficients: tuple[np.ndarray, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients)


def _jet_derivatives(jet) -> list[np.ndarray]:
    if isinstance(jet, TwistJet):
        return list(jet.derivatives)
    return [_screw(d) for d in jet]


@lru_cache(maxsize=None)
def compositions(k: int, l: int) -> tuple[Composition, ...]:
    """Ordered tuples of l positive integers summing to k, lexicographic.

    Returns the empty tuple when l > k.  There are C(k-1, l-1) of them.
    """
    if k < 1 or l < 1:
        raise ValueError("compositions requires k >= 1 and l >= 1")
    if k > MAX_ORDER:
        raise ValueError(f"composition order capped at k <= {MAX_ORDER}")
    if l > k:
        return ()
    if l == 1:
        return ((k,),)
    out = []
    for first in range(1, k - l + 2):
        for rest in compositions(k - first, l - 1):
            out.append((first,) + rest)
    return tuple(out)


def magnus_coefficients(jet, k: int) -> MagnusCoefficients:
    """Coefficients X_1..X_k of the reconstruction series from a twist jet.

    X_1 = V(0), X_2 = Vdot(0), and each higher coefficient subtracts
    nested-bracket corrections indexed by ordered compositions.  The jet
    must supply derivatives up to order k-1.
    """
    derivs = _jet_derivatives(jet)
    if k < 1:
        raise ValueError("order k must be at least 1")
    if k > MAX_ORDER:
        raise ValueError(f"recursion order capped at k <= {MAX_ORDER}")
    if len(derivs) < k:
        raise InsufficientJetError(
            f"jet of order {len(derivs)} cannot produce {k} coefficients"
        )
    X: list[np.ndarray] = [np.zeros(6)]
    Y: list[np.ndarray] = [np.zeros(6)]
    for n in range(1, k + 1):
        acc = np.zeros(6)
        for j in range(1, n):
            cj = 1.0 / math.factorial(j - 1)
            for l in range(1, n - j + 1):
                cl = 1.0 / math.factorial(l + 1)
                for pi in compositions(n - j, l):
                    term = X[j]
                    # innermost bracket first: ad_{Y_pi1} ... ad_{Y_pil} X_j
                    for p in reversed(pi):
                        term = bracket(Y[p], term)
                    acc = acc + cj * cl * term
        Xn = derivs[n - 1] - math.factorial(n - 1) * acc
        X.append(Xn)
        Y.append(Xn / math.factorial(n))
    return MagnusCoefficients(tuple(X[1:]))


def eval_series(coeffs: MagnusCoefficients, t: float) -> np.ndarray:
    """Evaluate X(t) = sum_{1<=i<=k} t^i/i! X_i (Horner form)."""
    out = np.zeros(6)
    for i in range(coeffs.order, 0, -1):
        out = (out + coeffs.coefficients[i - 1] / math.factorial(i)) * t
    return out


def x3_closed(jet, t: float) -> np.ndarray:
    """Closed third-order solution of the reconstruction ODE."""
    d = _jet_derivatives(jet)
    if len(d) < 3:
        raise InsufficientJetError("third-order solution needs a jet of order 3")
    v0, v1, v2 = d[0], d[1], d[2]
    t2, t3 = t * t, t * t * t
    return t * v0 + 0.5 * t2 * v1 + t3 / 6.0 * v2 - t3 / 12.0 * bracket(v0, v1)


def x4_closed(jet, t: float) -> np.ndarray:
    """Closed fourth-order solution of the reconstruction ODE."""
    d = _jet_derivatives(jet)
    if len(d) < 4:
        raise InsufficientJetError("fourth-order solution needs a jet of order 4")
    v0, v2, v3 = d[0], d[2], d[3]
    t4 = t ** 4
    return x3_closed(d[:3], t) + t4 / 24.0 * v3 - t4 / 24.0 * bracket(v0, v2)
