"""Kraus channels for independent and collective qubit noise.

A channel's operators are stored as one array of shape ``(..., k, d, d)``.
Leading axes index a batch of channel parameters, so ``dephasing_channel``
called with an array of strengths yields one channel per strength; applying
it to a single density matrix produces the stacked outputs in one pass.
"""

import enum
from dataclasses import dataclass

import numpy as np

from .qmatrix import (
    PAULI_I,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    STRUCT_TOL,
    dagger,
    expm,
    kron,
    num_qubits,
    pauli,
)


class NoiseKind(enum.Enum):
    DEPHASING = "dephasing"
    DEPOLARIZING = "depolarizing"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown noise kind {value!r}") from None


@dataclass(frozen=True, eq=False)
class KrausChannel:
    operators: np.ndarray

    def __post_init__(self):
        ops = np.asarray(self.operators, dtype=complex)
        if ops.ndim < 3 or ops.shape[-1] != ops.shape[-2]:
            raise ValueError(f"operators must have shape (..., k, d, d), got {ops.shape}")
        ops.setflags(write=False)
        object.__setattr__(self, "operators", ops)

    @property
    def dim(self):
        return self.operators.shape[-1]

    @property
    def batch_shape(self):
        return self.operators.shape[:-3]

    def __len__(self):
        return self.operators.shape[-3]

    def apply(self, rho):
        """Apply the channel to a full density matrix of matching dimension."""
        ops = self.operators
        rho = np.asarray(rho)
        return np.einsum("...kij,...jl,...kml->...im", ops, rho, np.conj(ops))


def _strength(p):
    p = np.asarray(p, dtype=float)
    if np.any(~np.isfinite(p)) or np.any(p < 0.0) or np.any(p > 1.0):
        raise ValueError(f"noise strength must lie in [0, 1], got {p}")
    return p


def dephasing_channel(p):
    """Single-qubit dephasing with Kraus pair diag(1, sqrt(1-p)), diag(0, sqrt(p))."""
    p = _strength(p)
    ops = np.zeros(p.shape + (2, 2, 2), dtype=complex)
    ops[..., 0, 0, 0] = 1.0
    ops[..., 0, 1, 1] = np.sqrt(1.0 - p)
    ops[..., 1, 1, 1] = np.sqrt(p)
    return KrausChannel(ops)


def depolarizing_channel(p):
    """Single-qubit depolarizing: sqrt(1 - 3p/4) I and sqrt(p)/2 times each Pauli."""
    p = _strength(p)[..., None, None]
    ops = np.stack(
        [
            np.sqrt(1.0 - 0.75 * p) * PAULI_I,
            0.5 * np.sqrt(p) * PAULI_X,
            0.5 * np.sqrt(p) * PAULI_Y,
            0.5 * np.sqrt(p) * PAULI_Z,
        ],
        axis=-3,
    )
    return KrausChannel(ops)


def single_qubit_channel(kind, p):
    kind = NoiseKind.parse(kind)
    if kind is NoiseKind.DEPHASING:
        return dephasing_channel(p)
    return depolarizing_channel(p)


def is_cptp(channel, tol=STRUCT_TOL):
    """True iff sum_k K^dagger K equals the identity within ``tol`` (every batch entry)."""
    ops = channel.operators
    total = np.einsum("...kji,...kjl->...il", np.conj(ops), ops)
    return bool(np.max(np.abs(total - np.eye(channel.dim))) <= tol)


def apply_single(channel, rho, qubit):
    """Apply a one-qubit channel to qubit ``qubit`` (1-based) of ``rho``.

    ``rho`` may carry leading batch axes; they broadcast against the
    channel's parameter batch.
    """
    if channel.dim != 2:
        raise ValueError("apply_single needs a single-qubit channel")
    rho = np.asarray(rho, dtype=complex)
    n = num_qubits(rho.shape[-1])
    if not 1 <= qubit <= n:
        raise ValueError(f"qubit {qubit} out of range 1..{n}")
    ops = channel.operators
    batch = np.broadcast_shapes(rho.shape[:-2], ops.shape[:-3])
    nb = len(batch)
    t = np.broadcast_to(rho, batch + rho.shape[-2:]).reshape(batch + (2,) * (2 * n))
    r_ax, c_ax = nb + qubit - 1, nb + n + qubit - 1
    # this qubit's (row, col) index pair goes last, flattened to length 4
    t = np.moveaxis(t, (r_ax, c_ax), (-2, -1))
    moved = t.shape
    t = t.reshape(batch + (-1, 4))
    # superoperator S[(i,j),(a,c)] = sum_k K[i,a] conj(K[j,c])
    sup = np.einsum("...kia,...kjc->...ijac", ops, np.conj(ops)).reshape(ops.shape[:-3] + (4, 4))
    out = t @ np.swapaxes(sup, -1, -2)
    out = np.moveaxis(out.reshape(moved), (-2, -1), (r_ax, c_ax))
    d = 2**n
    return out.reshape(batch + (d, d))


def apply_independent(kind, p, rho):
    """Same-strength single-qubit noise on every qubit of ``rho``.

    ``p`` may be an array; the result then has the batch shape of ``p``
    (broadcast against any batch axes of ``rho``).
    """
    channel = single_qubit_channel(kind, p)
    rho = np.asarray(rho, dtype=complex)
    n = num_qubits(rho.shape[-1])
    for q in range(1, n + 1):
        rho = apply_single(channel, rho, q)
    return rho


def product_kraus(channel, n):
    """Explicit product channel: all k**n tensor products of the operators.

    Only for unbatched channels; used to cross-check ``apply_independent``.
    """
    if channel.batch_shape:
        raise ValueError("product_kraus needs an unbatched channel")
    ops = list(channel.operators)
    out = ops
    for _ in range(n - 1):
        out = [np.kron(a, b) for a in out for b in ops]
    return KrausChannel(np.array(out))


def collective_angular_momentum(axis, n):
    """Total spin component ``J = (1/2) sum_j sigma_axis^(j)`` on ``n`` qubits."""
    s = pauli(axis)
    total = np.zeros((2**n, 2**n), dtype=complex)
    for j in range(n):
        total += kron(*[s if i == j else PAULI_I for i in range(n)])
    return 0.5 * total


def collective_rotation(axis, theta, n):
    """Unitary ``exp(-i (theta/2) sum_j sigma_axis^(j))`` acting on ``n`` qubits."""
    if n < 1:
        raise ValueError("need at least one qubit")
    return expm(-1j * theta * collective_angular_momentum(axis, n))


def collective_dephasing(rho, thetas=None):
    """Uniform mixture of collective z-rotations of ``rho``.

    The default angle set is eight points spaced by pi/4.
    """
    rho = np.asarray(rho, dtype=complex)
    n = num_qubits(rho.shape[-1])
    if thetas is None:
        thetas = np.arange(8) * np.pi / 4
    out = np.zeros_like(rho)
    for th in thetas:
        u = collective_rotation("z", th, n)
        out = out + u @ rho @ dagger(u)
    return out / len(thetas)


def collective_depolarizing_channel(p, n):
    """Depolarizing noise in which the same Pauli hits every qubit at once."""
    p = float(_strength(p))
    ops = [np.sqrt(1.0 - 0.75 * p) * np.eye(2**n, dtype=complex)]
    for s in (PAULI_X, PAULI_Y, PAULI_Z):
        ops.append(0.5 * np.sqrt(p) * kron(*[s] * n))
    return KrausChannel(np.array(ops))


@dataclass(frozen=True)
class TimeMap:
    """Exponential approach of the noise strength: ``p = 1 - exp(-kappa * tau)``."""

    kappa: float

    def __post_init__(self):
        if not self.kappa > 0:
            raise ValueError("kappa must be positive")


def p_of_time(time_map, tau):
    tau = np.asarray(tau, dtype=float)
    if np.any(tau < 0):
        raise ValueError("tau must be non-negative")
    p = -np.expm1(-time_map.kappa * tau)
    return float(p) if p.ndim == 0 else p
