import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from esdmem import entanglement as ent
from esdmem import qmatrix as qm

import oracles

seeds = st.integers(0, 2**32 - 1)

W_STATE = (qm.ket("001") + qm.ket("010") + qm.ket("100")) / np.sqrt(3)
GHZ = (qm.ket("000") + qm.ket("111")) / np.sqrt(2)


def test_singlet_values():
    rho = qm.projector((qm.ket("01") - qm.ket("10")) / np.sqrt(2))
    assert_allclose(ent.negativity(rho, [1]), 0.5, atol=1e-15)
    assert_allclose(ent.concurrence_lambda(rho), 1.0, atol=1e-14)


def test_product_state_has_nothing():
    rho = qm.projector(qm.kron(qm.ket("0"), (qm.ket("0") + qm.ket("1")) / np.sqrt(2)))
    assert ent.negativity(rho, [1]) == 0.0
    assert ent.concurrence(rho) == 0.0


def test_maximally_mixed_lambda():
    assert_allclose(ent.concurrence_lambda(np.eye(4) / 4), -0.5, atol=1e-15)


@pytest.mark.parametrize("w", [0.0, 0.2, 1 / 3, 0.5, 0.9, 1.0])
def test_werner_family(w):
    rho = oracles.werner(w)
    assert_allclose(ent.pt_min_eigenvalue(rho, [1]), (1 - 3 * w) / 4, atol=1e-15)
    assert_allclose(ent.concurrence_lambda(rho), (3 * w - 1) / 2, atol=1e-14)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_pure_state_concurrence(seed):
    psi = qm.random_pure_state(2, np.random.default_rng(seed))
    assert_allclose(ent.concurrence_lambda(qm.projector(psi)), oracles.pure_concurrence(psi), atol=1e-13)


@settings(max_examples=30, deadline=None)
@given(seeds, st.sampled_from([[1], [2], [1, 2], [3]]))
def test_pure_state_negativity_from_schmidt(seed, subset):
    psi = qm.random_pure_state(3, np.random.default_rng(seed))
    # move the chosen qubits to the front to read off the Schmidt split
    rest = [k for k in (1, 2, 3) if k not in subset]
    t = psi.reshape(2, 2, 2).transpose([k - 1 for k in subset + rest]).ravel()
    expected = oracles.schmidt_min_pt_eigenvalue(t, (2 ** len(subset), 2 ** len(rest)))
    assert_allclose(ent.pt_min_eigenvalue(qm.projector(psi), subset), expected, atol=1e-14)


def test_concurrence_roots_match_spectrum():
    rng = np.random.default_rng(0)
    for _ in range(50):
        rho = qm.random_density_matrix(2, rng)
        assert_allclose(ent.concurrence_roots(rho) ** 2, ent.concurrence_spectrum(rho), atol=1e-12)


def test_concurrence_is_local_unitary_invariant():
    rng = np.random.default_rng(1)
    rho = qm.random_density_matrix(2, rng, rank=2)
    u = qm.kron(qm.random_unitary(2, rng), qm.random_unitary(2, rng))
    assert_allclose(ent.concurrence_lambda(u @ rho @ u.conj().T), ent.concurrence_lambda(rho), atol=1e-13)


def test_concurrence_batched():
    rng = np.random.default_rng(2)
    stack = np.stack([qm.random_density_matrix(2, rng) for _ in range(4)])
    assert_allclose(ent.concurrence_lambda(stack), [ent.concurrence_lambda(r) for r in stack])


def test_concurrence_needs_two_qubits():
    with pytest.raises(ValueError):
        ent.concurrence_lambda(np.eye(8) / 8)


def test_concurrence_flags_complex_spectrum():
    # a general complex matrix is not a state; its spectrum leaves the real axis
    rng = np.random.default_rng(0)
    bad = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    with pytest.raises(ent.NumericalError):
        ent.concurrence_lambda(bad)


def test_tripartite_negativity_known_states():
    assert_allclose(ent.tripartite_negativity(qm.projector(W_STATE)), np.sqrt(2) / 3, atol=1e-14)
    assert_allclose(ent.tripartite_negativity(qm.projector(GHZ)), 0.5, atol=1e-14)
    biseparable = qm.kron(qm.projector((qm.ket("00") + qm.ket("11")) / np.sqrt(2)), qm.projector(qm.ket("0")))
    assert ent.tripartite_negativity(biseparable) == 0.0


def test_tripartite_needs_three_qubits():
    with pytest.raises(ValueError):
        ent.tripartite_negativity(np.eye(4) / 4)


def test_x_form():
    assert ent.is_x_form(oracles.werner(0.5))
    rho = qm.random_density_matrix(2, np.random.default_rng(3))
    assert not ent.is_x_form(rho)
