"""Real quaternions q = x0 + x1 i + x2 j + x3 k.

Components are always stored and serialized in the order (1, i, j, k).
A quaternion can equivalently be written as a pair of complex numbers,
q = c1 + c2 j with c1 = x0 + x1 i and c2 = x2 + x3 i.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import InvalidAxis, NearZeroQuaternion

EPS_SINGULAR = 1e-12
AXIS_TOL = 1e-9


class _Infinity:
    """The point at infinity completing R^2 or R^4 to a sphere."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


def is_infinity(value) -> bool:
    return value is INFINITY


@dataclass(frozen=True, slots=True)
class Quaternion:
    x0: float = 0.0
    x1: float = 0.0
    x2: float = 0.0
    x3: float = 0.0

    def __iter__(self):
        return iter((self.x0, self.x1, self.x2, self.x3))

    def __add__(self, other: Quaternion) -> Quaternion:
        return Quaternion(self.x0 + other.x0, self.x1 + other.x1,
                          self.x2 + other.x2, self.x3 + other.x3)

    def __sub__(self, other: Quaternion) -> Quaternion:
        return Quaternion(self.x0 - other.x0, self.x1 - other.x1,
                          self.x2 - other.x2, self.x3 - other.x3)

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.x0, -self.x1, -self.x2, -self.x3)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return mul(self, other)
        if isinstance(other, (int, float)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return self.scale(1.0 / other)
        return NotImplemented

    def scale(self, a: float) -> Quaternion:
        return Quaternion(a * self.x0, a * self.x1, a * self.x2, a * self.x3)

    def conj(self) -> Quaternion:
        return conj(self)

    def norm2(self) -> float:
        return self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3

    def norm(self) -> float:
        return math.sqrt(self.norm2())

    def is_unit(self, tol: float = AXIS_TOL) -> bool:
        return abs(self.norm2() - 1.0) <= tol

    @property
    def scalar(self) -> float:
        """S(q), the real part."""
        return self.x0

    @property
    def vector(self) -> Quaternion:
        """V(q), the pure imaginary part."""
        return Quaternion(0.0, self.x1, self.x2, self.x3)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.x0, self.x1, self.x2, self.x3)

    def close_to(self, other: Quaternion, tol: float) -> bool:
        return (self - other).norm() <= tol


ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)

QuaternionOrInfinity = Union[Quaternion, _Infinity]


def mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product p*q, from i^2 = j^2 = k^2 = ijk = -1."""
    a0, a1, a2, a3 = p.x0, p.x1, p.x2, p.x3
    b0, b1, b2, b3 = q.x0, q.x1, q.x2, q.x3
    return Quaternion(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def conj(q: Quaternion) -> Quaternion:
    return Quaternion(q.x0, -q.x1, -q.x2, -q.x3)


def inverse(q: Quaternion, eps: float = EPS_SINGULAR) -> Quaternion:
    """conj(q)/|q|^2.

    Raises NearZeroQuaternion when |q| <= eps; Hopf-map callers read that
    as the point at infinity.
    """
    n2 = q.norm2()
    if math.sqrt(n2) <= eps:
        raise NearZeroQuaternion(f"cannot invert quaternion of norm {math.sqrt(n2):.3g}")
    return conj(q).scale(1.0 / n2)


def from_complex_pair(c1: complex, c2: complex) -> Quaternion:
    c1 = complex(c1)
    c2 = complex(c2)
    return Quaternion(c1.real, c1.imag, c2.real, c2.imag)


def to_complex_pair(q: Quaternion) -> tuple[complex, complex]:
    return complex(q.x0, q.x1), complex(q.x2, q.x3)


def scalar_vector_split(q: Quaternion) -> tuple[float, Quaternion]:
    """Return (S(q), V(q)) with S(q) = (q + conj q)/2 and V(q) = (q - conj q)/2."""
    qc = conj(q)
    s = (q + qc).scale(0.5)
    v = (q - qc).scale(0.5)
    return s.x0, v


def exp_axis(phi: float, t: Quaternion, tol: float = AXIS_TOL) -> Quaternion:
    """cos(phi) + sin(phi) t for a unit pure imaginary axis t.

    The axis is validated, never renormalized.
    """
    if abs(t.x0) > tol or abs(t.norm2() - 1.0) > tol:
        raise InvalidAxis(f"axis {t.as_tuple()} is not a unit pure imaginary quaternion")
    s = math.sin(phi)
    return Quaternion(math.cos(phi), s * t.x1, s * t.x2, s * t.x3)
