import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfq.errors import InvalidAxis, NearZeroQuaternion
from hopfq.quaternion import (
    I,
    J,
    K,
    ONE,
    Quaternion,
    conj,
    exp_axis,
    from_complex_pair,
    inverse,
    mul,
    scalar_vector_split,
    to_complex_pair,
)

finite = st.floats(min_value=-100, max_value=100, allow_nan=False, allow_infinity=False)
quats = st.builds(Quaternion, finite, finite, finite, finite)


def as_matrix(q):
    """2x2 complex matrix representation, an independent route to the product."""
    a, b = complex(q.x0, q.x1), complex(q.x2, q.x3)
    return np.array([[a, b], [-b.conjugate(), a.conjugate()]])


def close(p, q, tol=1e-12):
    return (p - q).norm() <= tol * max(1.0, p.norm(), q.norm())


@pytest.mark.parametrize("p, q, expected", [
    (I, J, K), (J, K, I), (K, I, J),
    (J, I, -K), (K, J, -I), (I, K, -J),
    (I, I, -ONE), (J, J, -ONE), (K, K, -ONE),
])
def test_hamilton_table(p, q, expected):
    assert mul(p, q) == expected


def test_ijk_is_minus_one():
    assert mul(mul(I, J), K) == -ONE


@given(quats)
def test_identity_element(q):
    assert mul(ONE, q) == q
    assert mul(q, ONE) == q


@given(quats, quats)
def test_product_matches_matrix_representation(p, q):
    m = as_matrix(p) @ as_matrix(q)
    assert np.allclose(m, as_matrix(mul(p, q)), atol=1e-9 * (1 + p.norm() * q.norm()))


@given(quats, quats)
def test_norm_is_multiplicative(p, q):
    assert math.isclose(mul(p, q).norm(), p.norm() * q.norm(), rel_tol=1e-12, abs_tol=1e-12)


@given(quats, quats, quats)
def test_associative(p, q, r):
    lhs, rhs = mul(mul(p, q), r), mul(p, mul(q, r))
    scale = 1 + p.norm() * q.norm() * r.norm()
    assert (lhs - rhs).norm() <= 1e-12 * scale


@given(quats, quats)
def test_conjugation_reverses_products(p, q):
    assert close(conj(mul(p, q)), mul(conj(q), conj(p)))


def test_non_commutative_witness():
    assert (mul(I, J) - mul(J, I)).norm() > 0.5


def test_conj_examples():
    assert conj(Quaternion(1, 2, 3, 4)) == Quaternion(1, -2, -3, -4)


@given(quats)
def test_conj_involution_and_norm(q):
    assert conj(conj(q)) == q
    n = mul(q, conj(q))
    assert math.isclose(n.x0, q.norm2(), rel_tol=1e-12, abs_tol=1e-12)
    assert abs(n.x1) + abs(n.x2) + abs(n.x3) <= 1e-9 * (1 + q.norm2())


def test_inverse_examples():
    assert inverse(I) == -I
    assert inverse(Quaternion(2.0)) == Quaternion(0.5)


def test_inverse_random(rng):
    for _ in range(1000):
        q = Quaternion(*rng.standard_normal(4))
        assert close(mul(q, inverse(q)), ONE)
        assert close(inverse(q), conj(q).scale(1 / q.norm2()))


def test_inverse_near_zero():
    with pytest.raises(NearZeroQuaternion):
        inverse(Quaternion(1e-13, 0, 0, 0))
    with pytest.raises(NearZeroQuaternion):
        inverse(Quaternion())


def test_complex_pair():
    assert from_complex_pair(1 + 0j, 0) == ONE
    assert from_complex_pair(0, 1 + 0j) == J
    # c2 j with c2 = i gives ij = k
    assert from_complex_pair(0, 1j) == K


@given(finite, finite, finite, finite)
def test_complex_pair_round_trip(a, b, c, d):
    c1, c2 = complex(a, b), complex(c, d)
    assert to_complex_pair(from_complex_pair(c1, c2)) == (c1, c2)


@given(quats)
def test_complex_pair_is_c1_plus_c2_j(q):
    c1, c2 = to_complex_pair(q)
    rebuilt = from_complex_pair(c1, 0) + mul(from_complex_pair(c2, 0), J)
    assert close(rebuilt, q)


def test_scalar_vector_examples():
    s, v = scalar_vector_split(Quaternion(3, 0, 4, 0))
    assert s == 3 and v == Quaternion(0, 0, 4, 0)
    s, v = scalar_vector_split(Quaternion(-2.5))
    assert s == -2.5 and v == Quaternion()


@given(quats)
def test_scalar_plus_vector(q):
    s, v = scalar_vector_split(q)
    assert close(Quaternion(s) + v, q)
    assert v.x0 == 0


def test_exp_axis_examples():
    assert close(exp_axis(math.pi / 2, I), I)
    assert exp_axis(0.0, K) == ONE


def test_exp_axis_rejects_bad_axis():
    with pytest.raises(InvalidAxis):
        exp_axis(0.3, Quaternion(0, 2, 0, 0))
    with pytest.raises(InvalidAxis):
        exp_axis(0.3, Quaternion(0.1, 1, 0, 0))


def test_exp_axis_same_axis_additive(rng):
    for _ in range(500):
        v = rng.standard_normal(3)
        t = Quaternion(0, *(v / np.linalg.norm(v)))
        a, b = rng.uniform(-4, 4, 2)
        assert close(mul(exp_axis(a, t), exp_axis(b, t)), exp_axis(a + b, t))
        assert abs(exp_axis(a, t).norm() - 1) < 1e-12


def test_exp_axis_distinct_axes_not_additive():
    a, b = 0.7, 1.1
    prod = mul(exp_axis(a, I), exp_axis(b, J))
    # exp(a i + b j) = cos r + sin r (a i + b j)/r with r = |(a, b)|
    r = math.hypot(a, b)
    combined = Quaternion(math.cos(r), math.sin(r) * a / r, math.sin(r) * b / r, 0)
    assert (prod - combined).norm() > 0.1
