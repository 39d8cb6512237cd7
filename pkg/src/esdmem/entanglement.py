"""Entanglement measures: negativity, two-qubit concurrence and N3.

Negativity here is the magnitude of the single most negative eigenvalue of
the partial transpose, not the sum over negative eigenvalues. Concurrence
is returned as the unclamped quantity

    Lambda = sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)

so that its sign change marks the loss of entanglement; ``concurrence``
applies the usual ``max(0, Lambda)``.

All functions broadcast over leading batch axes.
"""

import numpy as np

from .qmatrix import (
    PAULI_Y,
    dagger,
    eigenvalues_general,
    eigenvalues_hermitian,
    num_qubits,
    partial_transpose,
)

REALNESS_TOL = 1e-8
# Below this a PT eigenvalue or concurrence counts as zero. Eigenvalue noise
# sits near 1e-16; genuine tails at p = 1 - 1e-6 are no smaller than ~1e-13.
ZERO_TOL = 1e-14

_YY = np.kron(PAULI_Y, PAULI_Y)


class NumericalError(ArithmeticError):
    """A computed quantity violated a property it must satisfy analytically."""


def pt_min_eigenvalue(rho, subset):
    """Smallest eigenvalue of the partial transpose over ``subset`` (signed)."""
    w = eigenvalues_hermitian(partial_transpose(rho, subset))
    return w[..., -1]


def negativity(rho, subset):
    return np.maximum(0.0, -pt_min_eigenvalue(rho, subset))


def _require_qubits(rho, n, what):
    if num_qubits(np.shape(rho)[-1]) != n:
        raise ValueError(f"{what} needs a {n}-qubit density matrix")


def concurrence_spectrum(rho2):
    """Eigenvalues of ``rho (Y x Y) rho* (Y x Y)``, real and in decreasing order."""
    rho2 = np.asarray(rho2, dtype=complex)
    _require_qubits(rho2, 2, "concurrence")
    r = rho2 @ _YY @ np.conj(rho2) @ _YY
    lam = eigenvalues_general(r)
    if np.max(np.abs(lam.imag), initial=0.0) > REALNESS_TOL:
        raise NumericalError("concurrence spectrum has a non-negligible imaginary part")
    lam = np.clip(lam.real, 0.0, None)
    return -np.sort(-lam, axis=-1)


def concurrence_roots(rho2):
    """Square roots of the concurrence spectrum, decreasing.

    With ``rho = X X^dagger`` the nonzero eigenvalues of
    ``rho (Y x Y) rho* (Y x Y)`` are the squared singular values of
    ``M = X^dagger (Y x Y) X*``, so the roots come straight from an SVD and
    do not inherit the ``sqrt(eps)`` error of rooting tiny eigenvalues.
    """
    rho2 = np.asarray(rho2, dtype=complex)
    _require_qubits(rho2, 2, "concurrence")
    mu, v = np.linalg.eigh(rho2)
    x = v * np.sqrt(np.clip(mu, 0.0, None))[..., None, :]
    m = dagger(x) @ _YY @ np.conj(x)
    return np.linalg.svd(m, compute_uv=False)


def concurrence_lambda(rho2):
    """Unclamped concurrence ``sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)``.

    Raises :class:`NumericalError` if the eigenvalues of
    ``rho (Y x Y) rho* (Y x Y)`` carry an imaginary part above 1e-8.
    """
    concurrence_spectrum(rho2)
    s = concurrence_roots(rho2)
    return s[..., 0] - s[..., 1] - s[..., 2] - s[..., 3]


def concurrence(rho2):
    return np.maximum(0.0, concurrence_lambda(rho2))


def tripartite_negativity(rho3):
    """Cube root of the product of the three single-qubit negativities."""
    _require_qubits(rho3, 3, "tripartite negativity")
    factors = np.stack([negativity(rho3, [k]) for k in (1, 2, 3)])
    factors = np.where(factors <= ZERO_TOL, 0.0, factors)
    return np.cbrt(np.prod(factors, axis=0))


def is_x_form(rho2, tol=1e-12):
    """True if only the diagonal and anti-diagonal of a 2-qubit matrix are nonzero."""
    rho2 = np.asarray(rho2)
    _require_qubits(rho2, 2, "X-form check")
    mask = ~(np.eye(4, dtype=bool) | np.fliplr(np.eye(4, dtype=bool)))
    return bool(np.all(np.abs(rho2[..., mask]) < tol))
