"""Brute-force linear algebra on explicit 4x4 and 2x2 matrices.

Nothing here touches quaternions or the Hopf maps; this is the independent
route every Hopf-side quantity is checked against. Eigendecomposition is the
closed-form trace/discriminant solution, no iterative solver.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import BadDensityMatrix, OracleMismatch
from .states import QubitState, SchmidtData, TwoQubitState, fix_phase

DEGENERACY_TOL = 1e-12
SPECTRUM_TOL = 1e-12
COLLINEAR_TOL = 1e-8
DENSITY_TOL = 1e-9

ID2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = {"x": SIGMA_X, "y": SIGMA_Y, "z": SIGMA_Z}

ID4 = np.eye(4, dtype=complex)
# -(sigma_y (x) sigma_y), contracted with Psi^T on the left (no conjugation)
ENTANGLOR = -np.kron(SIGMA_Y, SIGMA_Y)


def pauli_operator(which: str, slot: str) -> np.ndarray:
    """sigma_which (x) Id for slot 'first', Id (x) sigma_which for 'second'."""
    sigma = PAULI[which]
    if slot == "first":
        return np.kron(sigma, ID2)
    if slot == "second":
        return np.kron(ID2, sigma)
    raise ValueError(f"slot must be 'first' or 'second', got {slot!r}")


def outer_product(s: TwoQubitState) -> np.ndarray:
    v = s.vector
    return np.outer(v, v.conj())


def partial_trace(rho: np.ndarray, keep: str) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise BadDensityMatrix(f"expected a 4x4 matrix, got shape {rho.shape}")
    if not np.all(np.isfinite(rho)):
        raise BadDensityMatrix("non-finite entries")
    if np.max(np.abs(rho - rho.conj().T)) > DENSITY_TOL:
        raise BadDensityMatrix("matrix is not Hermitian")
    if abs(np.trace(rho) - 1.0) > DENSITY_TOL:
        raise BadDensityMatrix(f"trace {np.trace(rho)!r} is not 1")
    t = rho.reshape(2, 2, 2, 2)  # indices (a, b, a', b')
    if keep == "first":
        return np.einsum("ijkj->ik", t)
    if keep == "second":
        return np.einsum("jijk->ik", t)
    raise ValueError(f"keep must be 'first' or 'second', got {keep!r}")


def reduced_densities(s: TwoQubitState) -> tuple[np.ndarray, np.ndarray]:
    rho = outer_product(s)
    return partial_trace(rho, "first"), partial_trace(rho, "second")


def det2(m: np.ndarray) -> complex:
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]


def eig2_hermitian(m: np.ndarray) -> tuple[float, float, QubitState, QubitState]:
    """Closed-form eigensystem of a 2x2 Hermitian matrix.

    Returns (lam_plus, lam_minus, v_plus, v_minus) with lam_plus >= lam_minus.
    Eigenvectors are phase-fixed so their first non-negligible component is
    real positive. A discriminant below DEGENERACY_TOL yields the
    computational basis.
    """
    m = np.asarray(m, dtype=complex)
    a = m[0, 0].real
    d = m[1, 1].real
    b = 0.5 * (m[0, 1] + m[1, 0].conjugate())
    mean = 0.5 * (a + d)
    half = 0.5 * (a - d)
    r = math.hypot(half, abs(b))
    lam_p, lam_m = mean + r, mean - r
    if r <= DEGENERACY_TOL:
        return lam_p, lam_m, QubitState(1.0, 0.0), QubitState(0.0, 1.0)
    # two candidate (unnormalized) eigenvectors for lam_p; keep the better conditioned one
    u = (complex(b), complex(lam_p - a))
    w = (complex(lam_p - d), complex(b).conjugate())
    nu = abs(u[0]) ** 2 + abs(u[1]) ** 2
    nw = abs(w[0]) ** 2 + abs(w[1]) ** 2
    v, n = (u, nu) if nu >= nw else (w, nw)
    n = math.sqrt(n)
    vp = fix_phase((v[0] / n, v[1] / n))
    vm = fix_phase((-vp[1].conjugate(), vp[0].conjugate()))
    return lam_p, lam_m, QubitState(*vp), QubitState(*vm)


def expectation(s: TwoQubitState, op: np.ndarray) -> complex:
    v = s.vector
    return complex(np.vdot(v, np.asarray(op) @ v))


def entanglor_matrix_path(s: TwoQubitState) -> complex:
    """Psi^T (-sigma_y (x) sigma_y) Psi: transpose, not conjugate transpose."""
    v = s.vector
    return complex(v @ ENTANGLOR @ v)


def concurrence_via_det(s: TwoQubitState) -> float:
    rho1 = partial_trace(outer_product(s), "first")
    return 2.0 * math.sqrt(max(det2(rho1).real, 0.0))


def line_angle(u, v) -> float:
    """Angle between the complex lines spanned by u and v, in radians.

    Uses atan2(|perpendicular part|, |overlap|) which stays accurate for
    nearly collinear vectors where arccos would not.
    """
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    u = u / np.linalg.norm(u)
    v = v / np.linalg.norm(v)
    ov = np.vdot(u, v)
    perp = v - ov * u
    return math.atan2(float(np.linalg.norm(perp)), abs(ov))


def pair_partners(
    s: TwoQubitState,
    lam_plus: float,
    lam_minus: float,
    b1_plus: QubitState,
    b1_minus: QubitState,
    w_plus: QubitState,
    w_minus: QubitState,
    gap_tol: float = 1e-6,
) -> tuple[QubitState, QubitState]:
    """Second-subsystem Schmidt vectors paired with the first-subsystem ones.

    w_plus/w_minus are eigenvectors of rho2 ordered like lam_plus/lam_minus.
    Each is rephased so <b1 (x) b2 | Psi> is real and positive. When the
    spectrum is degenerate the rho2 eigenbasis carries no pairing
    information, so the partners are read off the state instead:
    b2 = (<b1| (x) Id)|Psi> / sqrt(lam).
    """
    psi = s.vector.reshape(2, 2)

    def contract(b1: QubitState) -> np.ndarray:
        return b1.vector.conj() @ psi

    if lam_plus - lam_minus > gap_tol:
        out = []
        for b1, w in ((b1_plus, w_plus), (b1_minus, w_minus)):
            coef = complex(np.vdot(w.vector, contract(b1)))
            if abs(coef) > 1e-14:
                ph = coef / abs(coef)
                out.append(QubitState(*(ph * w.vector)))
            else:
                out.append(w)
        return out[0], out[1]
    plus = QubitState.normalized_from(*contract(b1_plus))
    if lam_minus > 1e-14:
        minus = QubitState.normalized_from(*contract(b1_minus))
    else:
        minus = QubitState(-plus.beta.conjugate(), plus.alpha.conjugate())
    return plus, minus


def schmidt_via_oracle(s: TwoQubitState) -> SchmidtData:
    rho1, rho2 = reduced_densities(s)
    lp, lm, v1p, v1m = eig2_hermitian(rho1)
    mp, mm, w2p, w2m = eig2_hermitian(rho2)
    if abs(lp - mp) > SPECTRUM_TOL or abs(lm - mm) > SPECTRUM_TOL:
        raise OracleMismatch(f"marginal spectra differ: ({lp}, {lm}) vs ({mp}, {mm})")
    # the Hopf-parameter eigenvector formula, evaluated on the oracle's own entries
    a = rho1[0, 0].real
    c1_bar = rho1[0, 1]
    if lp - lm > 1e-6:
        for lam, v in ((lp, v1p), (lm, v1m)):
            phi = np.array([c1_bar, lam - a])
            if np.linalg.norm(phi) > 1e-6 and line_angle(phi, v.vector) > COLLINEAR_TOL:
                raise OracleMismatch("rho1 eigenvector not collinear with the Hopf-parameter formula")
    lm = max(lm, 0.0)
    b2p, b2m = pair_partners(s, lp, lm, v1p, v1m, w2p, w2m)
    return SchmidtData(lp, lm, math.sqrt(max(lp, 0.0)), math.sqrt(lm), v1p, v1m, b2p, b2m)
