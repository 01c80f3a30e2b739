import math

import numpy as np
import pytest

from hopfq.errors import BadDensityMatrix
from hopfq.oracle import (
    ENTANGLOR,
    concurrence_via_det,
    eig2_hermitian,
    entanglor_matrix_path,
    line_angle,
    outer_product,
    partial_trace,
    pauli_operator,
    reduced_densities,
    schmidt_via_oracle,
)
from hopfq.states import TwoQubitState
from hopfq.two_qubit import concurrence

R = 1 / math.sqrt(2)


def random_hermitian(rng):
    a = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    return a + a.conj().T


def test_eig2_against_numpy(rng):
    for _ in range(1000):
        m = random_hermitian(rng)
        lp, lm, vp, vm = eig2_hermitian(m)
        w = np.linalg.eigvalsh(m)
        assert abs(lp - w[1]) < 1e-12 * (1 + abs(w[1])) and abs(lm - w[0]) < 1e-12 * (1 + abs(w[0]))
        for lam, v in ((lp, vp), (lm, vm)):
            assert np.linalg.norm(m @ v.vector - lam * v.vector) < 1e-12 * (1 + np.abs(m).max())
        assert abs(np.vdot(vp.vector, vm.vector)) < 1e-14


def test_eig2_degenerate():
    lp, lm, vp, vm = eig2_hermitian(np.eye(2) * 0.5)
    assert lp == lm == 0.5
    assert np.allclose(vp.vector, [1, 0]) and np.allclose(vm.vector, [0, 1])


def test_eig2_diagonal():
    lp, lm, vp, vm = eig2_hermitian(np.diag([0.2, 0.8]).astype(complex))
    assert abs(lp - 0.8) < 1e-15 and abs(lm - 0.2) < 1e-15
    assert np.allclose(vp.vector, [0, 1])


def test_partial_trace_example():
    # |+>|0>: rho1 = |+><+|, rho2 = |0><0|
    rho = outer_product(TwoQubitState(R, 0, R, 0))
    assert np.allclose(partial_trace(rho, "first"), [[0.5, 0.5], [0.5, 0.5]])
    assert np.allclose(partial_trace(rho, "second"), [[1, 0], [0, 0]])


def test_partial_trace_bell_is_mixed():
    rho1, rho2 = reduced_densities(TwoQubitState(R, 0, 0, R))
    assert np.allclose(rho1, np.eye(2) / 2) and np.allclose(rho2, np.eye(2) / 2)


@pytest.mark.parametrize("bad", [
    np.eye(3),
    np.eye(4),                                  # trace 4
    np.diag([1, 0, 0, 0]) + 0.1j * np.eye(4, k=1),  # not Hermitian
])
def test_partial_trace_rejects(bad):
    with pytest.raises(BadDensityMatrix):
        partial_trace(np.asarray(bad, dtype=complex), "first")


def test_pauli_operator_slots():
    assert np.allclose(pauli_operator("x", "first"), np.kron([[0, 1], [1, 0]], np.eye(2)))
    assert np.allclose(pauli_operator("z", "second"), np.kron(np.eye(2), np.diag([1, -1])))


def test_entanglor_matrix():
    # -sigma_y (x) sigma_y is the antidiagonal (-1, 1, 1, -1) pattern reversed
    assert np.allclose(ENTANGLOR, np.fliplr(np.diag([1, -1, -1, 1])))


def test_entanglor_path_bell():
    assert abs(entanglor_matrix_path(TwoQubitState(R, 0, 0, R)) - 1) < 1e-15


def test_concurrence_via_det(two_qubit_states, product_states):
    for s in two_qubit_states:
        assert abs(concurrence_via_det(s) - concurrence(s)) < 1e-7
    for s in product_states:
        # sqrt of a determinant near zero: only ~sqrt(eps) accuracy
        assert concurrence_via_det(s) < 1e-7


def test_line_angle():
    assert line_angle([1, 0], [0, 1]) == pytest.approx(math.pi / 2)
    assert line_angle([1, 1j], [1j, -1]) < 1e-15
    assert line_angle([1, 0], [1, 1]) == pytest.approx(math.pi / 4)


def test_schmidt_via_oracle(two_qubit_states):
    for s in two_qubit_states:
        sd = schmidt_via_oracle(s)
        assert abs(np.vdot(sd.reconstruct(), s.vector)) ** 2 > 1 - 1e-12
