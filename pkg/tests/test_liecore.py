import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from screwmotion import (
    AngleNearPiError,
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
from screwmotion.liecore import dexp_rot, dexpinv_rot

from conftest import random_pose, random_screw

X_T_BENCHMARK = np.array([0.0, 3.0, 1.0, 2.0, 0.0, 1.0])
VT_PUBLISHED = np.array([0.0, 9.0, 3.0, 4.82629, -1.40384, 5.21152])

finite_floats = st.floats(-10.0, 10.0, allow_nan=False)
vec3 = st.tuples(finite_floats, finite_floats, finite_floats)


class TestHatVee:
    def test_zero(self):
        assert np.all(hat3([0, 0, 0]) == 0)

    def test_definition(self):
        expected = np.array([[0, -3, 2], [3, 0, -1], [-2, 1, 0]], dtype=float)
        np.testing.assert_array_equal(hat3([1, 2, 3]), expected)

    @given(vec3)
    @settings(max_examples=100, deadline=None)
    def test_roundtrip(self, v):
        np.testing.assert_allclose(vee3(hat3(v)), v, atol=1e-12)

    def test_vee_rejects_non_skew(self):
        with pytest.raises(ValueError):
            vee3(np.eye(3))

    def test_hat_action_is_cross_product(self, rng):
        for _ in range(20):
            a, b = rng.normal(size=3), rng.normal(size=3)
            np.testing.assert_allclose(hat3(a) @ b, np.cross(a, b), atol=1e-14)


class TestRotationExpLog:
    def test_exp_zero(self):
        np.testing.assert_array_equal(exp_rot([0, 0, 0]), np.eye(3))

    def test_quarter_turn_about_x(self):
        R = exp_rot([math.pi / 2, 0, 0])
        np.testing.assert_allclose(R @ [0, 1, 0], [0, 0, 1], atol=1e-15)

    def test_log_identity(self):
        np.testing.assert_array_equal(log_rot(np.eye(3)), np.zeros(3))

    def test_log_exp_specific(self):
        w = np.array([0.3, -0.2, 0.1])
        np.testing.assert_allclose(log_rot(exp_rot(w)), w, atol=1e-12)

    def test_roundtrip_random(self, rng):
        for _ in range(100):
            w = rng.normal(size=3)
            w *= rng.uniform(0.0, math.pi - 1e-3) / np.linalg.norm(w)
            np.testing.assert_allclose(log_rot(exp_rot(w)), w, atol=1e-10)

    def test_near_pi_boundary(self, rng):
        for _ in range(20):
            axis = rng.normal(size=3)
            axis /= np.linalg.norm(axis)
            w = (math.pi - 1e-5) * axis
            np.testing.assert_allclose(log_rot(exp_rot(w)), w, atol=1e-7)

    def test_small_angle(self):
        w = np.array([1e-8, -2e-8, 3e-9])
        np.testing.assert_allclose(log_rot(exp_rot(w)), w, atol=1e-18)

    def test_angle_beyond_cap_raises(self):
        R = exp_rot([math.pi - 1e-9, 0, 0])
        with pytest.raises(AngleNearPiError):
            log_rot(R)

    def test_orthonormality(self, rng):
        for _ in range(50):
            R = exp_rot(rng.normal(size=3))
            assert np.max(np.abs(R.T @ R - np.eye(3))) < 1e-14
            assert abs(np.linalg.det(R) - 1.0) < 1e-12


class TestPoseExpLog:
    def test_zero_screw(self):
        C = exp_pose(np.zeros(6))
        np.testing.assert_array_equal(C.rotation, np.eye(3))
        np.testing.assert_array_equal(C.translation, np.zeros(3))

    def test_pure_translation(self):
        C = exp_pose([0, 0, 0, 1, 2, 3])
        np.testing.assert_array_equal(C.rotation, np.eye(3))
        np.testing.assert_allclose(C.translation, [1, 2, 3], atol=1e-15)

    def test_roundtrip_random(self, rng):
        for _ in range(100):
            X = random_screw(rng, max_angle=math.pi - 1e-3)
            np.testing.assert_allclose(log_pose(exp_pose(X)), X, atol=1e-10)

    def test_benchmark_terminal_screw_pose_level(self):
        # The rotation angle of this screw is sqrt(10) > pi, so the
        # coordinate round trip lands on the equivalent principal screw;
        # the pose itself must be identical.
        C = exp_pose(X_T_BENCHMARK)
        C2 = exp_pose(log_pose(C))
        total, _ = distance(C, C2)
        assert total < 1e-10

    def test_matrix_roundtrip(self, rng):
        C = random_pose(rng)
        C2 = Pose.from_matrix(C.matrix())
        assert np.max(np.abs(C2.matrix() - C.matrix())) < 1e-15

    def test_compose_inverse(self, rng):
        C = random_pose(rng)
        I = C @ C.inverse()
        assert np.max(np.abs(I.matrix() - np.eye(4))) < 1e-14


class TestBracket:
    def test_self_bracket_zero(self, rng):
        X = rng.normal(size=6)
        np.testing.assert_array_equal(bracket(X, X), np.zeros(6))

    def test_so3_relation(self):
        ex = [1, 0, 0, 0, 0, 0]
        ey = [0, 1, 0, 0, 0, 0]
        np.testing.assert_array_equal(bracket(ex, ey), [0, 0, 1, 0, 0, 0])

    def test_antisymmetry(self, rng):
        for _ in range(50):
            X, Y = rng.normal(size=6), rng.normal(size=6)
            np.testing.assert_allclose(bracket(X, Y), -bracket(Y, X), atol=1e-14)

    def test_jacobi_identity(self, rng):
        for _ in range(100):
            X, Y, Z = (rng.uniform(-1, 1, 6) for _ in range(3))
            s = (
                bracket(X, bracket(Y, Z))
                + bracket(Y, bracket(Z, X))
                + bracket(Z, bracket(X, Y))
            )
            assert np.max(np.abs(s)) < 1e-12


class TestAdOp:
    def test_zero(self):
        assert np.all(ad_op(np.zeros(6)) == 0)

    def test_annihilates_self(self, rng):
        for _ in range(20):
            X = rng.normal(size=6)
            assert np.max(np.abs(ad_op(X) @ X)) < 1e-14

    def test_matches_bracket(self, rng):
        for _ in range(100):
            X, Y = rng.uniform(-1, 1, 6), rng.uniform(-1, 1, 6)
            np.testing.assert_allclose(ad_op(X) @ Y, bracket(X, Y), atol=1e-14)


class TestDexp:
    def test_series_zero_any_n(self):
        for n in (0, 1, 5, 20):
            np.testing.assert_array_equal(dexp_series(np.zeros(6), n), np.eye(6))
            np.testing.assert_array_equal(dexpinv_series(np.zeros(6), n), np.eye(6))

    def test_series_mutual_inverse_core_domain(self, rng):
        for _ in range(100):
            X = random_screw(rng, max_angle=1.5)
            P = dexp_series(X, 20) @ dexpinv_series(X, 20)
            assert np.max(np.abs(P - np.eye(6))) < 1e-12

    def test_series_mutual_inverse_full_domain(self, rng):
        # Truncation tail of the Bernoulli series grows towards the domain
        # edge; ~2e-10 is the measured worst case at angle 2.
        for _ in range(100):
            X = random_screw(rng, max_angle=2.0)
            P = dexp_series(X, 20) @ dexpinv_series(X, 20)
            assert np.max(np.abs(P - np.eye(6))) < 1e-9

    def test_closed_matches_series(self, rng):
        for _ in range(100):
            X = random_screw(rng, max_angle=2.0)
            diff = dexp_closed(X) - dexp_series(X, 20)
            assert np.max(np.abs(diff)) < 1e-12

    def test_closed_zero(self):
        np.testing.assert_array_equal(dexp_closed(np.zeros(6)), np.eye(6))
        np.testing.assert_array_equal(dexpinv_closed(np.zeros(6)), np.eye(6))

    def test_closed_mutual_inverse(self, rng):
        for _ in range(100):
            X = random_screw(rng, max_angle=math.pi - 1e-3)
            P = dexp_closed(X) @ dexpinv_closed(X)
            assert np.max(np.abs(P - np.eye(6))) < 1e-12

    def test_benchmark_terminal_twist(self):
        out = dexp_closed(X_T_BENCHMARK) @ np.array([0.0, 9.0, 3.0, 2.0, 0.0, 1.0])
        np.testing.assert_allclose(out, VT_PUBLISHED, atol=5e-5)

    def test_parallel_angular_part_unchanged(self, rng):
        for _ in range(20):
            X = random_screw(rng, max_angle=2.0)
            Y = np.concatenate([rng.uniform(0.1, 2.0) * X[:3], rng.uniform(-1, 1, 3)])
            out_closed = dexp_closed(X) @ Y
            out_series = dexp_series(X, 20) @ Y
            np.testing.assert_allclose(out_closed[:3], Y[:3], atol=1e-12)
            np.testing.assert_allclose(out_closed, out_series, atol=1e-12)

    def test_dexpinv_beyond_cap_raises(self):
        with pytest.raises(AngleNearPiError):
            dexpinv_closed([2 * math.pi, 0, 0, 0, 0, 0])
        with pytest.raises(AngleNearPiError):
            dexpinv_rot([2 * math.pi - 1e-9, 0, 0])

    def test_benchmark_screw_inside_dexpinv_domain(self):
        # Angle sqrt(10) exceeds pi but stays well below the 2 pi singularity.
        M = dexpinv_closed(X_T_BENCHMARK)
        P = dexp_closed(X_T_BENCHMARK) @ M
        assert np.max(np.abs(P - np.eye(6))) < 1e-12

    def test_exp_derivative_matches_dexp(self, rng):
        # Central differences of (d/dt exp X) exp(-X) converge at order h^2
        # to dexp_X Xdot for a smooth coordinate curve.
        a = random_screw(rng, 1.0)
        b = random_screw(rng, 1.0)

        def X(t):
            return t * a + t * t * b

        def fd_twist(t, h):
            Mp = exp_pose(X(t + h)).matrix()
            Mm = exp_pose(X(t - h)).matrix()
            D = (Mp - Mm) / (2 * h) @ np.linalg.inv(exp_pose(X(t)).matrix())
            W = 0.5 * (D[:3, :3] - D[:3, :3].T)
            return np.concatenate([vee3(W, tol=np.inf), D[:3, 3]])

        t = 0.7
        truth = dexp_closed(X(t)) @ (a + 2 * t * b)
        e1 = np.max(np.abs(fd_twist(t, 1e-3) - truth))
        e2 = np.max(np.abs(fd_twist(t, 5e-4) - truth))
        assert 3.8 < e1 / e2 < 4.2


class TestDexpRot:
    def test_translation_block_consistency(self, rng):
        # exp_pose translation equals dexp_rot(w) @ v by construction.
        for _ in range(20):
            X = random_screw(rng, 2.0)
            C = exp_pose(X)
            np.testing.assert_allclose(
                C.translation, dexp_rot(X[:3]) @ X[3:], atol=1e-14
            )

    def test_rot_inverse_pair(self, rng):
        for _ in range(20):
            w = rng.normal(size=3)
            w *= rng.uniform(0, math.pi - 1e-3) / np.linalg.norm(w)
            P = dexp_rot(w) @ dexpinv_rot(w)
            assert np.max(np.abs(P - np.eye(3))) < 1e-13


class TestDistance:
    def test_identity(self, rng):
        C = random_pose(rng)
        total, comps = distance(C, C)
        assert total == 0.0
        assert comps.rotational == 0.0 and comps.translational == 0.0

    def test_pure_rotation(self):
        theta = 0.8
        total, comps = distance(Pose.identity(), exp_pose([0, 0, theta, 0, 0, 0]))
        assert abs(comps.rotational - theta) < 1e-12
        assert comps.translational < 1e-12

    def test_left_invariance(self, rng):
        for _ in range(50):
            C1, C2, A = (random_pose(rng, 1.2) for _ in range(3))
            d, c = distance(C1, C2)
            dA, cA = distance(A @ C1, A @ C2)
            assert abs(d - dA) < 1e-10
            assert abs(c.rotational - cA.rotational) < 1e-10
            assert abs(c.translational - cA.translational) < 1e-10

    def test_weights(self):
        C2 = exp_pose([0, 0, 0.5, 0, 0, 0])
        total, comps = distance(Pose.identity(), C2, MetricWeights(alpha=2.0, beta=3.0))
        assert abs(total - 2.0 * comps.rotational - 3.0 * comps.translational) < 1e-15

    def test_bad_weights(self):
        with pytest.raises(ValueError):
            MetricWeights(alpha=-1.0)
        with pytest.raises(ValueError):
            MetricWeights(alpha=0.0, beta=0.0)
