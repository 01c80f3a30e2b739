"""The S^7 -> S^4 Hopf fibration of the two-qubit state space.

A state is a quaternion pair (q1, q2) on the unit S^7. The map
h1: (q1, q2) -> Q = conj(q1 q2^-1) lands in R^4 + {inf}; the inverse
stereographic projection h2 from the north pole x0 = +1 sends Q to the base
point (x0, ..., x4) on S^4. For the standard grouping

    x0 = cos 2 Omega,  x1 + i x2 = 2 C1,  x3 + i x4 = 2 C2,

so separable states (C2 = 0) land on the x3 = x4 = 0 sphere.
"""
from __future__ import annotations

import enum
import math
from typing import NamedTuple

from . import single_qubit
from .errors import (
    DegenerateOmega,
    InconsistentOmega,
    InvalidFiberPoint,
    NearZeroQuaternion,
    NotSeparable,
)
from .quaternion import (
    EPS_SINGULAR,
    I,
    INFINITY,
    ONE,
    J,
    Quaternion,
    QuaternionOrInfinity,
    conj,
    exp_axis,
    from_complex_pair,
    inverse,
    is_infinity,
    mul,
    to_complex_pair,
)
from .states import BlochVector, QubitState, TwoQubitState, inner
from .two_qubit import concurrence, hopf_invariants

UNIT_TOL = 1e-9
OMEGA_TOL = 1e-9
AXIS_EPS = 1e-15


class FibrationChart(enum.Enum):
    STANDARD = "standard"   # (alpha, beta | gamma, delta), Q = conj(q1 q2^-1)
    REVERSED = "reversed"   # (alpha, beta | gamma, delta), Q = conj(q2^-1 q1)
    SWAPPED = "swapped"     # (alpha, gamma | beta, delta), Q = conj(q1 q2^-1)


def _chart(chart) -> FibrationChart:
    return chart if isinstance(chart, FibrationChart) else FibrationChart(chart)


class QuaternionPair(NamedTuple):
    q1: Quaternion
    q2: Quaternion

    def right_act(self, q: Quaternion) -> QuaternionPair:
        return QuaternionPair(mul(self.q1, q), mul(self.q2, q))

    def left_act(self, q: Quaternion) -> QuaternionPair:
        return QuaternionPair(mul(q, self.q1), mul(q, self.q2))


class S4Point(NamedTuple):
    x0: float
    x1: float
    x2: float
    x3: float
    x4: float

    @property
    def sin_2omega(self) -> float:
        return math.sqrt(self.x1 ** 2 + self.x2 ** 2 + self.x3 ** 2 + self.x4 ** 2)

    @property
    def omega(self) -> float:
        return 0.5 * math.atan2(self.sin_2omega, self.x0)

    @property
    def theta(self) -> float:
        """Angle with cos(theta) = S(Q'), in [0, pi]."""
        v = math.sqrt(self.x2 ** 2 + self.x3 ** 2 + self.x4 ** 2)
        return math.atan2(v, self.x1)

    @property
    def axis(self) -> Quaternion:
        """Unit pure imaginary t = V(Q')/sin(theta); i where undefined."""
        return _axis(Quaternion(self.x1, self.x2, self.x3, self.x4))


def _axis(qn: Quaternion) -> Quaternion:
    v = math.sqrt(qn.x1 ** 2 + qn.x2 ** 2 + qn.x3 ** 2)
    if v <= AXIS_EPS:
        return I
    return Quaternion(0.0, qn.x1 / v, qn.x2 / v, qn.x3 / v)


# --- state <-> quaternion pair ---------------------------------------------

def to_pair(s: TwoQubitState, chart=FibrationChart.STANDARD) -> QuaternionPair:
    a, b, g, d = s.amplitudes
    if _chart(chart) is FibrationChart.SWAPPED:
        return QuaternionPair(from_complex_pair(a, g), from_complex_pair(b, d))
    return QuaternionPair(from_complex_pair(a, b), from_complex_pair(g, d))


def from_pair(p: QuaternionPair, chart=FibrationChart.STANDARD) -> TwoQubitState:
    u1, u2 = to_complex_pair(p.q1)
    w1, w2 = to_complex_pair(p.q2)
    if _chart(chart) is FibrationChart.SWAPPED:
        return TwoQubitState(u1, w1, u2, w2)
    return TwoQubitState(u1, u2, w1, w2)


# --- forward maps ------------------------------------------------------------

def h1(p: QuaternionPair, chart=FibrationChart.STANDARD) -> QuaternionOrInfinity:
    try:
        q2inv = inverse(p.q2, EPS_SINGULAR)
    except NearZeroQuaternion:
        return INFINITY
    if _chart(chart) is FibrationChart.REVERSED:
        return conj(mul(q2inv, p.q1))
    return conj(mul(p.q1, q2inv))


def h2(Q: QuaternionOrInfinity) -> S4Point:
    """Inverse stereographic projection R^4 + {inf} -> S^4 from the north pole."""
    if is_infinity(Q):
        return S4Point(1.0, 0.0, 0.0, 0.0, 0.0)
    n2 = Q.norm2()
    d = 1.0 + n2
    return S4Point((n2 - 1.0) / d, 2.0 * Q.x0 / d, 2.0 * Q.x1 / d, 2.0 * Q.x2 / d, 2.0 * Q.x3 / d)


def stereo_s4(x: S4Point) -> QuaternionOrInfinity:
    """Projection S^4 -> R^4 + {inf}, the inverse of h2.

    Evaluated as cot(Omega) Q' rather than (x1..x4)/(1 - x0) to keep full
    relative precision near the north pole.
    """
    r = x.sin_2omega
    if r == 0.0:
        return INFINITY if x.x0 > 0 else Quaternion()
    omega = 0.5 * math.atan2(r, x.x0)
    so = math.sin(omega)
    if so <= EPS_SINGULAR:
        return INFINITY
    k = math.cos(omega) / so / r
    return Quaternion(k * x.x1, k * x.x2, k * x.x3, k * x.x4)


def base_coordinates(s: TwoQubitState, chart=FibrationChart.STANDARD) -> S4Point:
    return h2(h1(to_pair(s, chart), chart))


def base_coordinates_closed_form(s: TwoQubitState) -> S4Point:
    """Standard-chart coordinates written directly in C1, C2 and Omega."""
    inv = hopf_invariants(s)
    x0 = (abs(s.alpha) ** 2 + abs(s.beta) ** 2) - (abs(s.gamma) ** 2 + abs(s.delta) ** 2)
    return S4Point(x0, 2 * inv.c1.real, 2 * inv.c1.imag, 2 * inv.c2.real, 2 * inv.c2.imag)


def torus_radii(s: TwoQubitState) -> tuple[float, float]:
    inv = hopf_invariants(s)
    return 2.0 * abs(inv.c1), 2.0 * abs(inv.c2)


# --- inverse map -------------------------------------------------------------

def _check_fiber(q: Quaternion) -> None:
    if abs(q.norm2() - 1.0) > UNIT_TOL:
        raise InvalidFiberPoint(f"fiber quaternion has squared norm {q.norm2()!r}")


def _resolve_omega(Q: QuaternionOrInfinity, omega: float | None) -> float:
    if is_infinity(Q):
        derived = 0.0
        if omega is not None and abs(omega) > OMEGA_TOL:
            raise InconsistentOmega(f"Q = inf requires Omega = 0, got {omega}")
        return derived
    derived = math.atan2(1.0, Q.norm())
    if omega is None:
        return derived
    if not -OMEGA_TOL <= omega <= math.pi / 2 + OMEGA_TOL:
        raise InconsistentOmega(f"Omega={omega} outside [0, pi/2]")
    # |Q| = cot(Omega), compared as |Q| sin - cos to stay finite at Omega = 0
    if abs(Q.norm() * math.sin(omega) - math.cos(omega)) > OMEGA_TOL * max(1.0, Q.norm()):
        raise InconsistentOmega(f"|Q|={Q.norm()!r} does not equal cot({omega!r})")
    return omega


def inverse_hopf(
    Q: QuaternionOrInfinity,
    omega: float | None = None,
    fiber_q: Quaternion = ONE,
    chart=FibrationChart.STANDARD,
) -> TwoQubitState:
    """A state mapped to Q by h1, picked out on its S^3 fiber by fiber_q.

    (q1, q2) = (cos W exp(-theta t/2) q, sin W exp(theta t/2) q), with
    cos(theta) = S(Q'), theta in [0, pi] and t = V(Q')/sin(theta), defaulting
    to t = i when V(Q') vanishes. The reversed chart multiplies q on the left.
    Omega may be omitted, in which case it follows from |Q| = cot(Omega).
    """
    _check_fiber(fiber_q)
    omega = _resolve_omega(Q, omega)
    if is_infinity(Q) or Q.norm2() == 0.0:
        theta, t = 0.0, I
    else:
        qn = Q.scale(1.0 / Q.norm())
        t = _axis(qn)
        theta = math.atan2(math.sqrt(qn.x1 ** 2 + qn.x2 ** 2 + qn.x3 ** 2), qn.x0)
    left = exp_axis(-0.5 * theta, t).scale(math.cos(omega))
    right = exp_axis(0.5 * theta, t).scale(math.sin(omega))
    chart = _chart(chart)
    if chart is FibrationChart.REVERSED:
        pair = QuaternionPair(mul(fiber_q, left), mul(fiber_q, right))
    else:
        pair = QuaternionPair(mul(left, fiber_q), mul(right, fiber_q))
    return from_pair(pair, chart)


def lift_base_point(x: S4Point, fiber_q: Quaternion = ONE,
                    chart=FibrationChart.STANDARD) -> TwoQubitState:
    """A state whose base point is x (x is renormalized onto S^4 first)."""
    n = math.sqrt(sum(c * c for c in x))
    x = S4Point(*(c / n for c in x))
    return inverse_hopf(stereo_s4(x), 0.5 * math.atan2(x.sin_2omega, x.x0), fiber_q, chart)


def fiber_basis(Q: QuaternionOrInfinity, omega: float | None = None) -> tuple[TwoQubitState, TwoQubitState]:
    """The fiber points at q = 1 and q = j, i.e. |0>_Q and |1>_Q.

    For complex Q (separable locus) these are u (x) |0> and u (x) |1> with the
    same first-qubit factor u, hence orthonormal. Off that locus they are
    still on the fiber over Q but need not be orthogonal.
    """
    return inverse_hopf(Q, omega, ONE), inverse_hopf(Q, omega, J)


def second_qubit_bloch(s: TwoQubitState, tol: float = 1e-9) -> BlochVector:
    """Bloch vector of the second qubit, read off the fiber of a separable state.

    The state is expanded as a|0>_Q + b|1>_Q on its own fiber and the S^3
    Hopf map is applied to (a, b).
    """
    c = concurrence(s)
    if c > tol:
        raise NotSeparable(f"concurrence {c:.3g} exceeds {tol:g}")
    zero_q, one_q = fiber_basis(h1(to_pair(s)))
    amps = s.amplitudes
    a = inner(zero_q.amplitudes, amps)
    b = inner(one_q.amplitudes, amps)
    return single_qubit.hopf_map(QubitState.normalized_from(a, b))


# --- special states ----------------------------------------------------------

def _phase_axis(c2_phase: float) -> Quaternion:
    """exp(i chi) j as a quaternion: cos(chi) j + sin(chi) k."""
    return Quaternion(0.0, 0.0, math.cos(c2_phase), math.sin(c2_phase))


def omega_mes_state(omega: float, c2_phase: float = 0.0, fiber_q: Quaternion = ONE) -> TwoQubitState:
    """Maximal concurrence (sin 2 Omega) at fixed x0 = cos 2 Omega, with C1 = 0.

    (cos W exp(-(pi/4) u j) q, sin W exp((pi/4) u j) q) where u = exp(i c2_phase)
    is the phase of C2.
    """
    if not 0.0 < omega < math.pi / 2 or min(omega, math.pi / 2 - omega) <= OMEGA_TOL:
        raise DegenerateOmega(f"Omega={omega} must lie strictly inside (0, pi/2)")
    _check_fiber(fiber_q)
    t = _phase_axis(c2_phase)
    q1 = mul(exp_axis(-math.pi / 4, t), fiber_q).scale(math.cos(omega))
    q2 = mul(exp_axis(math.pi / 4, t), fiber_q).scale(math.sin(omega))
    return from_pair(QuaternionPair(q1, q2))


def mes_state(c2_phase: float = 0.0, fiber_q: Quaternion = ONE) -> TwoQubitState:
    """Maximally entangled state with C2 = exp(i c2_phase)/2."""
    return omega_mes_state(math.pi / 4, c2_phase, fiber_q)


_SQRT_HALF = math.sqrt(0.5)
BELL_PARAMETERS = {
    # name: (C2 phase, fiber quaternion); C2 = +1/2 -> phase 0, C2 = -1/2 -> phase pi
    "phi+": (0.0, Quaternion(_SQRT_HALF, 0.0, _SQRT_HALF, 0.0)),
    "psi-": (0.0, Quaternion(_SQRT_HALF, 0.0, -_SQRT_HALF, 0.0)),
    "psi+": (math.pi, Quaternion(_SQRT_HALF, 0.0, _SQRT_HALF, 0.0)),
    "phi-": (math.pi, Quaternion(_SQRT_HALF, 0.0, -_SQRT_HALF, 0.0)),
}
BELL_ORDER = ("phi+", "phi-", "psi+", "psi-")


def bell_state(name: str) -> TwoQubitState:
    """One of the four Bell states via mes_state with q = (1 +- j)/sqrt 2, C2 = +-1/2.

    psi- comes out as -(|01> - |10>)/sqrt 2, i.e. equal up to global phase.
    """
    phase, q = BELL_PARAMETERS[name]
    return mes_state(phase, q)
