"""Random states: standard normal reals normalized onto the unit sphere."""
from __future__ import annotations

import numpy as np

from .quaternion import Quaternion
from .states import QubitState, TwoQubitState


def make_rng(seed=None) -> np.random.Generator:
    return np.random.default_rng(seed)


def unit_vector(rng: np.random.Generator, dim: int) -> np.ndarray:
    while True:
        v = rng.standard_normal(dim)
        n = np.linalg.norm(v)
        if n > 1e-6:
            return v / n


def random_qubit(rng: np.random.Generator) -> QubitState:
    v = unit_vector(rng, 4)
    return QubitState(complex(v[0], v[1]), complex(v[2], v[3]))


def random_two_qubit(rng: np.random.Generator) -> TwoQubitState:
    v = unit_vector(rng, 8)
    return TwoQubitState(*(complex(v[2 * k], v[2 * k + 1]) for k in range(4)))


def random_product(rng: np.random.Generator) -> TwoQubitState:
    return TwoQubitState.product(random_qubit(rng), random_qubit(rng))


def random_unit_quaternion(rng: np.random.Generator) -> Quaternion:
    return Quaternion(*(float(c) for c in unit_vector(rng, 4)))


def random_quaternion(rng: np.random.Generator, scale: float = 1.0) -> Quaternion:
    return Quaternion(*(float(c) for c in scale * rng.standard_normal(4)))
