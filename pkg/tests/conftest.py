import numpy as np
import pytest

from screwmotion import Pose, exp_pose


@pytest.fixture
def rng():
    return np.random.default_rng(42)


def random_screw(rng, max_angle=2.0):
    """Random screw with rotation angle up to max_angle."""
    w = rng.normal(size=3)
    w *= rng.uniform(0.0, max_angle) / np.linalg.norm(w)
    return np.concatenate([w, rng.uniform(-1.0, 1.0, 3)])


def random_pose(rng, max_angle=2.0) -> Pose:
    return exp_pose(random_screw(rng, max_angle))
