import numpy as np
import pytest
from numpy.testing import assert_allclose

from esdmem import channels as ch
from esdmem import qmatrix as qm
from esdmem.channels import NoiseKind

import oracles

P11 = np.linspace(0.0, 1.0, 11)


@pytest.mark.parametrize("kind", list(NoiseKind))
def test_channels_cptp_on_grid(kind):
    for p in P11:
        assert ch.is_cptp(ch.single_qubit_channel(kind, p), tol=1e-12)
    assert ch.is_cptp(ch.single_qubit_channel(kind, P11), tol=1e-12)


def test_dephasing_action_on_plus_state():
    plus = np.full((2, 2), 0.5)
    out = ch.dephasing_channel(0.36).apply(plus)
    assert_allclose(out, [[0.5, 0.4], [0.4, 0.5]])


def test_depolarizing_full_strength_is_maximally_mixing():
    rho = qm.random_density_matrix(1, np.random.default_rng(0))
    assert_allclose(ch.depolarizing_channel(1.0).apply(rho), np.eye(2) / 2, atol=1e-15)


def test_depolarizing_shrinks_bloch_vector():
    rho = qm.projector(qm.ket("0"))
    out = ch.depolarizing_channel(0.3).apply(rho)
    assert_allclose(np.trace(out @ qm.PAULI_Z).real, 0.7)


def test_strength_out_of_range():
    for bad in (-0.1, 1.1, np.nan):
        with pytest.raises(ValueError):
            ch.dephasing_channel(bad)


@pytest.mark.parametrize("kind", list(NoiseKind))
def test_apply_independent_equals_product_kraus(kind):
    rng = np.random.default_rng(1)
    for _ in range(3):
        rho = qm.random_density_matrix(3, rng)
        p = rng.uniform()
        ops = ch.single_qubit_channel(kind, p).operators
        expected = oracles.product_channel_loops(ops, rho, 3)
        assert_allclose(ch.apply_independent(kind, p, rho), expected, atol=1e-12)
        assert_allclose(ch.product_kraus(ch.single_qubit_channel(kind, p), 3).apply(rho), expected, atol=1e-12)


def test_apply_single_targets_one_qubit():
    rho = qm.projector(qm.ket("000"))
    flip = ch.KrausChannel(qm.PAULI_X[None])
    assert_allclose(ch.apply_single(flip, rho, 2), qm.projector(qm.ket("010")))
    with pytest.raises(ValueError):
        ch.apply_single(flip, rho, 4)


def test_apply_independent_batches_over_p():
    rho = qm.random_density_matrix(2, np.random.default_rng(2))
    ps = np.array([0.1, 0.5, 0.9])
    out = ch.apply_independent("depolarizing", ps, rho)
    assert out.shape == (3, 4, 4)
    for k, p in enumerate(ps):
        assert_allclose(out[k], ch.apply_independent("depolarizing", p, rho), atol=1e-15)


def test_collective_rotation_is_product_of_local_rotations():
    theta = 1.1
    u1 = qm.expm(-0.5j * theta * qm.PAULI_Y)
    assert_allclose(ch.collective_rotation("y", theta, 3), qm.kron(u1, u1, u1), atol=1e-14)


def test_collective_dephasing_preserves_zero_sz_coherence():
    psi = (qm.ket("01") + qm.ket("10")) / np.sqrt(2)
    rho = qm.projector(psi)
    assert_allclose(ch.collective_dephasing(rho), rho, atol=1e-14)
    plus = qm.projector((qm.ket("00") + qm.ket("11")) / np.sqrt(2))
    assert abs(ch.collective_dephasing(plus)[0, 3]) < 1e-13


def test_collective_depolarizing_is_cptp():
    assert ch.is_cptp(ch.collective_depolarizing_channel(0.4, 3))


def test_noise_kind_parse():
    assert NoiseKind.parse("Dephasing") is NoiseKind.DEPHASING
    with pytest.raises(ValueError):
        NoiseKind.parse("amplitude")


def test_time_map():
    tm = ch.TimeMap(2.0)
    assert ch.p_of_time(tm, 0.0) == 0.0
    assert_allclose(ch.p_of_time(tm, np.log(2) / 2), 0.5)
    with pytest.raises(ValueError):
        ch.TimeMap(0.0)
    with pytest.raises(ValueError):
        ch.p_of_time(tm, -1.0)
