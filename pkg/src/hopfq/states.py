"""State containers shared by every module.

Amplitudes are plain Python complex numbers. Two-qubit amplitudes are
ordered on the product basis (|00>, |01>, |10>, |11>).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

import numpy as np

from .errors import NotNormalized
from .quaternion import _Infinity

TOL_NORM = 1e-9

ComplexOrInfinity = Union[complex, _Infinity]


def _check_norm(amps: Sequence[complex], tol: float) -> None:
    n2 = sum(abs(a) ** 2 for a in amps)
    if not math.isfinite(n2) or abs(n2 - 1.0) > tol:
        raise NotNormalized(f"squared norm {n2!r} differs from 1 by more than {tol:g}")


def _normalize(amps: Sequence[complex]) -> list[complex]:
    amps = [complex(a) for a in amps]
    n = math.sqrt(sum(abs(a) ** 2 for a in amps))
    if not math.isfinite(n) or n == 0.0:
        raise NotNormalized("cannot normalize a zero or non-finite vector")
    return [a / n for a in amps]


@dataclass(frozen=True, slots=True)
class QubitState:
    """alpha|0> + beta|1>, rejected unless normalized within TOL_NORM."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))
        _check_norm((self.alpha, self.beta), TOL_NORM)

    @classmethod
    def normalized_from(cls, alpha: complex, beta: complex) -> QubitState:
        return cls(*_normalize((alpha, beta)))

    @classmethod
    def from_vector(cls, vec) -> QubitState:
        a, b = vec
        return cls(complex(a), complex(b))

    @property
    def amplitudes(self) -> tuple[complex, complex]:
        return (self.alpha, self.beta)

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.alpha, self.beta], dtype=complex)

    def with_phase(self, phi: float) -> QubitState:
        ph = complex(math.cos(phi), math.sin(phi))
        return QubitState(ph * self.alpha, ph * self.beta)


@dataclass(frozen=True, slots=True)
class TwoQubitState:
    """alpha|00> + beta|01> + gamma|10> + delta|11>."""

    alpha: complex
    beta: complex
    gamma: complex
    delta: complex

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        _check_norm(self.amplitudes, TOL_NORM)

    @classmethod
    def normalized_from(cls, alpha, beta, gamma, delta) -> TwoQubitState:
        return cls(*_normalize((alpha, beta, gamma, delta)))

    @classmethod
    def from_vector(cls, vec) -> TwoQubitState:
        a, b, c, d = vec
        return cls(complex(a), complex(b), complex(c), complex(d))

    @classmethod
    def product(cls, first: QubitState, second: QubitState) -> TwoQubitState:
        a, b = first.amplitudes
        u, v = second.amplitudes
        return cls(a * u, a * v, b * u, b * v)

    @property
    def amplitudes(self) -> tuple[complex, complex, complex, complex]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.amplitudes, dtype=complex)

    def with_phase(self, phi: float) -> TwoQubitState:
        ph = complex(math.cos(phi), math.sin(phi))
        return TwoQubitState(*(ph * a for a in self.amplitudes))


class BlochVector(NamedTuple):
    x: float
    y: float
    z: float


def inner(a: Sequence[complex], b: Sequence[complex]) -> complex:
    """<a|b>, conjugating the left argument."""
    return sum((x.conjugate() * y for x, y in zip(a, b)), 0j)


def fidelity(a, b) -> float:
    """|<a|b>|^2 for two states (or raw amplitude sequences)."""
    va = a.amplitudes if hasattr(a, "amplitudes") else tuple(a)
    vb = b.amplitudes if hasattr(b, "amplitudes") else tuple(b)
    return abs(inner(va, vb)) ** 2


def fix_phase(vec: Sequence[complex], eps: float = 1e-12) -> tuple[complex, ...]:
    """Rotate the global phase so the first component with modulus > eps is real positive."""
    for c in vec:
        if abs(c) > eps:
            ph = c.conjugate() / abs(c)
            return tuple(ph * x for x in vec)
    return tuple(vec)


@dataclass(frozen=True)
class SchmidtData:
    """Schmidt form weight_cos |b1+>|b2+> + weight_sin |b1->|b2->."""

    lambda_plus: float
    lambda_minus: float
    weight_cos: float
    weight_sin: float
    basis1_plus: QubitState
    basis1_minus: QubitState
    basis2_plus: QubitState
    basis2_minus: QubitState

    @property
    def epsilon(self) -> float:
        return 2.0 * math.atan2(self.weight_sin, self.weight_cos)

    def reconstruct(self) -> np.ndarray:
        return (self.weight_cos * np.kron(self.basis1_plus.vector, self.basis2_plus.vector)
                + self.weight_sin * np.kron(self.basis1_minus.vector, self.basis2_minus.vector))
