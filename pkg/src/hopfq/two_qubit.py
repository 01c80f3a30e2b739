"""Two-qubit invariants: C1, C2, Omega, concurrence, entanglor, Schmidt form.

With q1 = alpha + beta j and q2 = gamma + delta j,

    C1 = conj(alpha) gamma + conj(beta) delta
    C2 = alpha delta - beta gamma
    cos(Omega) = |q1|,  sin(Omega) = |q2|

C2 carries all of the entanglement: the concurrence is 2|C2|.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import oracle
from .errors import PoleState
from .states import (
    QubitState,
    SchmidtData,
    TwoQubitState,
    fix_phase,
    inner,
)

EPS_POLE = 1e-9
EQ_VECTOR_MIN_NORM = 1e-6

__all__ = [
    "HopfInvariants",
    "TrivialDecomposition",
    "SchmidtData",
    "hopf_invariants",
    "concurrence",
    "is_separable",
    "entanglor_expectation",
    "trivial_decomposition",
    "schmidt",
    "schmidt_eigenvalues",
    "pauli_expectation",
]


@dataclass(frozen=True)
class HopfInvariants:
    c1: complex
    c2: complex
    omega: float

    @property
    def cos_omega(self) -> float:
        return math.cos(self.omega)

    @property
    def sin_omega(self) -> float:
        return math.sin(self.omega)


@dataclass(frozen=True)
class TrivialDecomposition:
    """cos(Omega) |0>|u2> + sin(Omega) |1>|v2>; generally not a Schmidt form."""

    omega: float
    u2: QubitState
    v2: QubitState
    overlap: complex

    def reassemble(self) -> TwoQubitState:
        c, s = math.cos(self.omega), math.sin(self.omega)
        return TwoQubitState(c * self.u2.alpha, c * self.u2.beta,
                             s * self.v2.alpha, s * self.v2.beta)


def _omega_parts(s: TwoQubitState) -> tuple[float, float]:
    return (math.sqrt(abs(s.alpha) ** 2 + abs(s.beta) ** 2),
            math.sqrt(abs(s.gamma) ** 2 + abs(s.delta) ** 2))


def hopf_invariants(s: TwoQubitState) -> HopfInvariants:
    a, b, g, d = s.amplitudes
    c1 = a.conjugate() * g + b.conjugate() * d
    c2 = a * d - b * g
    co, so = _omega_parts(s)
    return HopfInvariants(c1, c2, math.atan2(so, co))


def concurrence(s: TwoQubitState) -> float:
    return 2.0 * abs(s.alpha * s.delta - s.beta * s.gamma)


def is_separable(s: TwoQubitState, tol: float = 1e-9) -> bool:
    return concurrence(s) <= tol


def entanglor_expectation(s: TwoQubitState) -> complex:
    """<E> = 2 C2; its real and imaginary parts are the base coordinates x3, x4."""
    return 2.0 * (s.alpha * s.delta - s.beta * s.gamma)


def pauli_expectation(s: TwoQubitState, which: str, slot: str = "first") -> float:
    """<sigma (x) Id> or <Id (x) sigma> through the explicit 4x4 matrices."""
    return oracle.expectation(s, oracle.pauli_operator(which, slot)).real


def trivial_decomposition(s: TwoQubitState, eps: float = EPS_POLE) -> TrivialDecomposition:
    co, so = _omega_parts(s)
    if co <= eps or so <= eps:
        raise PoleState(f"cos(Omega)={co:.3g}, sin(Omega)={so:.3g}: single-term state")
    u2 = QubitState(s.alpha / co, s.beta / co)
    v2 = QubitState(s.gamma / so, s.delta / so)
    return TrivialDecomposition(math.atan2(so, co), u2, v2, inner(u2.amplitudes, v2.amplitudes))


def schmidt_eigenvalues(c: float, root: float | None = None) -> tuple[float, float]:
    """lambda_+- = (1 +- sqrt(1 - c^2)) / 2.

    root, when given, is sqrt(1 - c^2) computed some better way; near c = 1
    the direct square root keeps only half the digits. lambda_- is evaluated
    as (c^2/4) / lambda_+ (same value, no cancellation).
    """
    c = min(abs(c), 1.0)
    if root is None:
        root = math.sqrt(max(1.0 - c * c, 0.0))
    lp = 0.5 * (1.0 + min(root, 1.0))
    return lp, 0.25 * c * c / lp


def _first_basis(s: TwoQubitState, inv: HopfInvariants, lp: float, lm: float):
    """phi_+- = conj(C1)|0> + (lambda_+- - |q1|^2)|1>, normalized.

    Returns None when either vector is too short to fix a direction.
    """
    q1n2 = abs(s.alpha) ** 2 + abs(s.beta) ** 2
    out = []
    for lam in (lp, lm):
        v = (inv.c1.conjugate(), complex(lam - q1n2))
        n = math.sqrt(abs(v[0]) ** 2 + abs(v[1]) ** 2)
        if n < EQ_VECTOR_MIN_NORM:
            return None
        out.append(QubitState(*fix_phase((v[0] / n, v[1] / n))))
    return out


def schmidt(s: TwoQubitState) -> SchmidtData:
    inv = hopf_invariants(s)
    co, so = _omega_parts(s)
    # 1 - c^2 = cos^2(2 Omega) + 4|C1|^2, the squared Bloch length of rho1
    root = math.hypot((co - so) * (co + so), 2.0 * abs(inv.c1))
    lp, lm = schmidt_eigenvalues(2.0 * abs(inv.c2), root)
    basis = _first_basis(s, inv, lp, lm)
    if basis is None:
        _, _, b1p, b1m = oracle.eig2_hermitian(_rho1(s, inv))
    else:
        b1p, b1m = basis
    _, _, w2p, w2m = oracle.eig2_hermitian(_rho2(s))
    b2p, b2m = oracle.pair_partners(s, lp, lm, b1p, b1m, w2p, w2m)
    return SchmidtData(lp, lm, math.sqrt(lp), math.sqrt(lm), b1p, b1m, b2p, b2m)


def _rho1(s: TwoQubitState, inv: HopfInvariants):
    q1n2 = abs(s.alpha) ** 2 + abs(s.beta) ** 2
    q2n2 = abs(s.gamma) ** 2 + abs(s.delta) ** 2
    return np.array([[q1n2, inv.c1.conjugate()], [inv.c1, q2n2]], dtype=complex)


def _rho2(s: TwoQubitState):
    """Second marginal, built from the invariants of the swapped grouping (alpha, gamma | beta, delta)."""
    a, b, g, d = s.amplitudes
    c1_swapped = a.conjugate() * b + g.conjugate() * d
    p = abs(a) ** 2 + abs(g) ** 2
    q = abs(b) ** 2 + abs(d) ** 2
    return np.array([[p, c1_swapped.conjugate()], [c1_swapped, q]], dtype=complex)
