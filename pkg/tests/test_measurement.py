import numpy as np
import pytest
from hypothesis import given, strategies as st

from vnlift import (
    BasisError,
    HermitianBasis,
    ShapeError,
    UnitarityError,
    apply,
    build_C,
    build_C0,
    consistency_check,
    from_unitary,
    gell_mann_basis,
    lift_matrix,
    lift_matrix_nonorthonormal,
    numerical_rank,
    pauli_gell_mann_basis,
    random_unitary,
    rotate_basis,
)
from tests.conftest import SIGMA

HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)


def test_from_unitary_computational_basis():
    meas = from_unitary(np.eye(2))
    proj = meas.projectors()
    assert np.allclose(proj[0], np.diag([1.0, 0.0]))
    assert np.allclose(proj[1], np.diag([0.0, 1.0]))


def test_from_unitary_hadamard():
    proj = from_unitary(HADAMARD).projectors()
    plus = np.full((2, 2), 0.5)
    assert np.allclose(proj[0], plus)
    assert np.allclose(proj[1], np.array([[0.5, -0.5], [-0.5, 0.5]]))


def test_from_unitary_rejects_non_unitary():
    with pytest.raises(UnitarityError):
        from_unitary(np.array([[1, 1], [0, 1]], dtype=complex))


def test_apply_fixes_diagonal():
    meas = from_unitary(np.eye(3))
    d = np.diag([0.2, 0.5, 0.3]).astype(complex)
    assert np.allclose(apply(meas, d), d)


def test_apply_kills_off_diagonal():
    meas = from_unitary(np.eye(2))
    assert np.allclose(apply(meas, SIGMA[1]), np.zeros((2, 2)))


def test_hadamard_measurement_annihilates_sigma3():
    meas = from_unitary(HADAMARD)
    assert np.max(np.abs(apply(meas, SIGMA[3]))) <= 1e-12


@given(st.integers(0, 2**32 - 1))
def test_apply_idempotent_and_trace_preserving(seed):
    rng = np.random.default_rng(seed)
    meas = from_unitary(random_unitary(3, seed))
    g = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    h = g + g.conj().T
    once = apply(meas, h)
    assert np.allclose(apply(meas, once), once, atol=1e-12)
    assert abs(np.trace(once) - np.trace(h)) <= 1e-12


def test_lift_m2_computational_pauli_order():
    lifted = lift_matrix(from_unitary(np.eye(2)), pauli_gell_mann_basis(2))
    assert np.max(np.abs(lifted.matrix - np.diag([0.0, 0.0, 1.0]))) <= 1e-12
    assert numerical_rank(lifted.matrix) == 1


def test_lift_m3_computational_gell_mann_order():
    lifted = lift_matrix(from_unitary(np.eye(3)), pauli_gell_mann_basis(3))
    expected = np.diag([0.0, 0, 1, 0, 0, 0, 0, 1])
    assert np.max(np.abs(lifted.matrix - expected)) <= 1e-12
    assert numerical_rank(lifted.matrix) == 2


def test_lift_random_unitary_m4():
    lifted = lift_matrix(from_unitary(random_unitary(4, 42)), gell_mann_basis(4))
    assert lifted.idempotency_defect < 1e-10
    assert numerical_rank(lifted.matrix) == 3


def test_lift_rejects_dimension_mismatch():
    with pytest.raises(ShapeError):
        lift_matrix(from_unitary(np.eye(2)), gell_mann_basis(3))


def test_lift_rejects_non_orthonormal_basis():
    b = gell_mann_basis(2)
    bad = HermitianBasis(dim=2, elements=(2 * b.elements[0],) + b.elements[1:], labels=b.labels)
    with pytest.raises(BasisError):
        lift_matrix(from_unitary(np.eye(2)), bad)


def test_lift_uniform_scaling_invariance():
    # A uniformly scaled basis leaves the lift unchanged (Gram-system path).
    meas = from_unitary(random_unitary(3, 9))
    b = gell_mann_basis(3)
    reference = lift_matrix(meas, b).matrix
    scaled = [np.sqrt(2.0) * el for el in b.elements]
    general = lift_matrix_nonorthonormal(meas, scaled)
    assert np.allclose(general, reference, atol=1e-10)


def test_lift_basis_covariance():
    rng = np.random.default_rng(3)
    meas = from_unitary(random_unitary(3, 21))
    b = gell_mann_basis(3)
    m_canonical = lift_matrix(meas, b).matrix
    v = rng.standard_normal(8)
    o = np.eye(8) - 2.0 * np.outer(v, v) / (v @ v)
    m_rotated = lift_matrix(meas, rotate_basis(b, o)).matrix
    assert np.allclose(m_rotated, o.T @ m_canonical @ o, atol=1e-10)


def test_build_C_identity_m2():
    c = build_C(np.eye(2))
    expected = np.array([[1 / np.sqrt(2), 0, 0], [-1 / np.sqrt(2), 0, 0]])
    assert np.allclose(c, expected)
    assert numerical_rank(c) == 1


def test_build_C0_identity_m2():
    c0 = build_C0(np.eye(2))
    expected = np.array([[1.0, 0, 0], [-1.0, 0, 0]], dtype=complex)
    assert np.allclose(c0, expected)
    assert numerical_rank(c0) == 1


@pytest.mark.parametrize("m", [2, 3, 4])
def test_C_and_C0_rank_and_row_sums(m):
    for k in range(25):
        u = random_unitary(m, 100 * m + k)
        c = build_C(u)
        c0 = build_C0(u)
        assert c.shape == (m, m * m - 1)
        assert c0.shape == (m, m * m - 1)
        assert numerical_rank(c) == m - 1
        assert numerical_rank(c0) == m - 1
        assert np.max(np.abs(c.sum(axis=0))) <= 1e-12
        assert np.max(np.abs(c0.sum(axis=0))) <= 1e-12


def test_build_C_rejects_non_unitary():
    with pytest.raises(UnitarityError):
        build_C(np.ones((2, 2)))
    with pytest.raises(UnitarityError):
        build_C0(np.ones((2, 2)))


def test_consistency_check_fixed_bases():
    b = gell_mann_basis(2)
    assert consistency_check(from_unitary(np.eye(2)), b) <= 1e-12
    assert consistency_check(from_unitary(HADAMARD), b) <= 1e-12


def test_consistency_check_random_m4():
    meas = from_unitary(random_unitary(4, 77))
    assert consistency_check(meas, gell_mann_basis(4)) <= 1e-10
