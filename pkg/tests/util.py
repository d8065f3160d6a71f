"""Shared helpers for the test suite."""

import numpy as np

from polquat import Quaternion


def rand_quat(rng: np.random.Generator, scale: float = 1.0) -> Quaternion:
    return Quaternion(*(float(scale * x) for x in rng.normal(size=4)))


def rand_unit(rng: np.random.Generator) -> Quaternion:
    while True:
        q = rand_quat(rng)
        if q.norm() > 1e-3:
            return q.normalized()


def rand_unit_vector(rng: np.random.Generator) -> Quaternion:
    while True:
        v = rng.normal(size=3)
        n = np.linalg.norm(v)
        if n > 1e-3:
            return Quaternion(0.0, *(float(x / n) for x in v))


def rodrigues(axis, angle: float) -> np.ndarray:
    """Rotation matrix about a unit 3-vector, right-hand rule.

    Kept deliberately independent of the quaternion code paths: this is the
    reference for the Poincare-sphere precession law.
    """
    axis = np.asarray(axis, dtype=float)
    k = np.array([[0.0, -axis[2], axis[1]],
                  [axis[2], 0.0, -axis[0]],
                  [-axis[1], axis[0], 0.0]])
    return np.eye(3) + np.sin(angle) * k + (1.0 - np.cos(angle)) * (k @ k)
