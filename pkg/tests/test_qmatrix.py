import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from esdmem import qmatrix as qm

import oracles


def rng_for(seed):
    return np.random.default_rng(seed)


def test_ket_and_msb_convention():
    v = qm.ket("10")
    assert v[2] == 1 and np.count_nonzero(v) == 1
    with pytest.raises(ValueError):
        qm.ket("012")


def test_num_qubits_rejects_non_power_of_two():
    assert qm.num_qubits(16) == 4
    with pytest.raises(ValueError):
        qm.num_qubits(6)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_kron_matches_index_formula(seed):
    rng = rng_for(seed)
    a = rng.normal(size=(2, 3)) + 1j * rng.normal(size=(2, 3))
    b = rng.normal(size=(3, 2)) + 1j * rng.normal(size=(3, 2))
    k = qm.kron(a, b)
    ref = np.array([[oracles.kron_entry(a, b, i, j) for j in range(k.shape[1])] for i in range(k.shape[0])])
    assert_allclose(k, ref, rtol=1e-15, atol=0)


def test_partial_trace_bell_pair():
    singlet = (qm.ket("01") - qm.ket("10")) / np.sqrt(2)
    assert_allclose(qm.partial_trace(qm.projector(singlet), [1]), np.eye(2) / 2, atol=1e-15)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([[1], [2], [3], [1, 3], [2, 3], [1, 2]]))
def test_partial_trace_matches_index_sum(seed, traced):
    rho = qm.random_density_matrix(3, rng_for(seed))
    assert_allclose(qm.partial_trace(rho, traced), oracles.partial_trace_loops(rho, traced), atol=1e-14)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([[1], [2], [3], [1, 2], [1, 2, 3]]))
def test_partial_transpose_matches_index_swap(seed, subset):
    rho = qm.random_density_matrix(3, rng_for(seed))
    assert_allclose(qm.partial_transpose(rho, subset), oracles.partial_transpose_loops(rho, subset))


def test_partial_transpose_full_subset_is_transpose():
    rho = qm.random_density_matrix(2, rng_for(1))
    assert_allclose(qm.partial_transpose(rho, [1, 2]), rho.T)


def test_subsystem_ops_are_batched():
    rng = rng_for(2)
    stack = np.stack([qm.random_density_matrix(3, rng) for _ in range(5)]).reshape(5, 1, 8, 8)
    out = qm.partial_trace(stack, [2])
    assert out.shape == (5, 1, 4, 4)
    assert_allclose(out[3, 0], qm.partial_trace(stack[3, 0], [2]))


def test_subset_validation():
    rho = np.eye(4) / 4
    with pytest.raises(ValueError):
        qm.partial_trace(rho, [3])
    with pytest.raises(ValueError):
        qm.partial_trace(rho, [1, 2])
    with pytest.raises(ValueError):
        qm.partial_transpose(rho, [0])


def test_reduce_to_keeps_listed_qubits():
    rho = qm.random_density_matrix(3, rng_for(3))
    assert_allclose(qm.reduce_to(rho, [1, 3]), qm.partial_trace(rho, [2]))


def test_check_density_matrix():
    qm.check_density_matrix(np.eye(2) / 2)
    with pytest.raises(ValueError):
        qm.check_density_matrix(np.diag([1.2, -0.2]))
    with pytest.raises(ValueError):
        qm.check_density_matrix(np.array([[0.5, 0.1], [0.0, 0.5]]))


def test_fidelity_pure_clamps_and_checks_dims():
    psi = qm.ket("0")
    assert qm.fidelity_pure(np.diag([1 + 1e-15, 0]), psi) == 1.0
    with pytest.raises(ValueError):
        qm.fidelity_pure(np.eye(4) / 4, psi)


@pytest.mark.parametrize("method", ["jacobi", "lapack"])
def test_hermitian_eigenvalues_against_charpoly(method):
    rng = rng_for(4)
    for d in (2, 4, 8):
        h = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        h = h + h.conj().T
        w = qm.eigenvalues_hermitian(h, method)
        assert np.all(np.diff(w) <= 0)
        assert oracles.match_spectra(oracles.charpoly_roots(h), w) < 1e-8


def test_jacobi_handles_degenerate_and_diagonal():
    assert_allclose(qm.eigenvalues_hermitian(np.eye(8) / 8, "jacobi"), np.full(8, 1 / 8))
    rho = qm.projector(qm.random_pure_state(4, rng_for(5)))
    w = qm.eigenvalues_hermitian(rho, "jacobi")
    assert_allclose(w, [1] + [0] * 15, atol=1e-14)


def test_eigenvalues_hermitian_rejects_non_hermitian():
    with pytest.raises(ValueError):
        qm.eigenvalues_hermitian(np.array([[0, 1], [0, 0]]))


@pytest.mark.parametrize("method", ["qr", "lapack"])
def test_general_eigenvalues_against_charpoly(method):
    rng = rng_for(6)
    for d in (2, 3, 4):
        m = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        assert oracles.match_spectra(oracles.charpoly_roots(m), qm.eigenvalues_general(m, method)) < 1e-8


def test_qr_real_matrix_with_complex_pair():
    rot = np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 2.0]])
    w = qm.eigenvalues_general(rot, "qr")
    assert oracles.match_spectra([1j, -1j, 2], w) < 1e-12


def test_hessenberg_is_similar_and_upper_hessenberg():
    m = rng_for(7).normal(size=(6, 6))
    h = qm.hessenberg(m)
    assert np.allclose(np.tril(h, -2), 0, atol=1e-14)
    assert oracles.match_spectra(np.linalg.eigvals(m), np.linalg.eigvals(h)) < 1e-10


def test_expm_of_pauli_rotation():
    theta = 0.7
    u = qm.expm(-1j * theta * qm.PAULI_X)
    assert_allclose(u, np.cos(theta) * np.eye(2) - 1j * np.sin(theta) * qm.PAULI_X, atol=1e-15)
    big = qm.expm(-1j * 40.0 * qm.PAULI_Z)
    assert_allclose(big @ big.conj().T, np.eye(2), atol=1e-12)


def test_random_generators_are_valid_states():
    rng = rng_for(8)
    qm.check_density_matrix(qm.random_density_matrix(3, rng))
    qm.check_density_matrix(qm.random_density_matrix(2, rng, rank=1))
    u = qm.random_unitary(4, rng)
    assert_allclose(u @ u.conj().T, np.eye(4), atol=1e-14)
