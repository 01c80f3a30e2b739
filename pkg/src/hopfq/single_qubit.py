"""Single-qubit Bloch coordinates and the S^3 -> S^2 Hopf fibration.

The Hopf map is split into h1: (alpha, beta) -> conj(alpha / beta) in
C + {inf}, followed by the inverse stereographic projection from the north
pole onto the unit sphere cut by the plane along its equator. The composite
lands exactly on the Bloch vector.
"""
from __future__ import annotations

import cmath
import math

import numpy as np

from .quaternion import EPS_SINGULAR, INFINITY, is_infinity
from .states import BlochVector, ComplexOrInfinity, QubitState

__all__ = [
    "bloch_coordinates",
    "density_matrix",
    "density_from_bloch",
    "hopf_h1",
    "inverse_stereo_s2",
    "stereo_s2",
    "fiber_sample",
    "hopf_map",
]


def bloch_coordinates(s: QubitState) -> BlochVector:
    """(X, Y, Z) = (2 Re(conj(a) b), 2 Im(conj(a) b), |a|^2 - |b|^2)."""
    ab = s.alpha.conjugate() * s.beta
    return BlochVector(2.0 * ab.real, 2.0 * ab.imag, abs(s.alpha) ** 2 - abs(s.beta) ** 2)


def density_matrix(s: QubitState) -> np.ndarray:
    """|psi><psi| as an explicit outer product."""
    v = s.vector
    return np.outer(v, v.conj())


def density_from_bloch(b: BlochVector) -> np.ndarray:
    x, y, z = b
    return 0.5 * np.array([[1 + z, x - 1j * y], [x + 1j * y, 1 - z]], dtype=complex)


def hopf_h1(s: QubitState, eps: float = EPS_SINGULAR) -> ComplexOrInfinity:
    if abs(s.beta) <= eps:
        return INFINITY
    return (s.alpha / s.beta).conjugate()


def inverse_stereo_s2(c: ComplexOrInfinity) -> BlochVector:
    if is_infinity(c):
        return BlochVector(0.0, 0.0, 1.0)
    c = complex(c)
    n2 = c.real * c.real + c.imag * c.imag
    d = 1.0 + n2
    return BlochVector(2.0 * c.real / d, 2.0 * c.imag / d, (n2 - 1.0) / d)


def stereo_s2(b: BlochVector, eps: float = EPS_SINGULAR) -> ComplexOrInfinity:
    """Projection from the north pole; inverse of inverse_stereo_s2."""
    x, y, z = b
    if 1.0 - z <= eps:
        return INFINITY
    return complex(x, y) / (1.0 - z)


def hopf_map(s: QubitState) -> BlochVector:
    return inverse_stereo_s2(hopf_h1(s))


def fiber_sample(s: QubitState, phi: float) -> QubitState:
    ph = cmath.exp(1j * phi)
    return QubitState(ph * s.alpha, ph * s.beta)


def lift(c: ComplexOrInfinity) -> QubitState:
    """A representative state with hopf_h1 equal to c (beta real non-negative)."""
    if is_infinity(c):
        return QubitState(1.0, 0.0)
    c = complex(c)
    beta = 1.0 / math.sqrt(1.0 + abs(c) ** 2)
    return QubitState(c.conjugate() * beta, beta)
