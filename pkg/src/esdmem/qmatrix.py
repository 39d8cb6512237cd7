"""Dense complex-matrix kernel for few-qubit density-matrix simulation.

Everything here works on plain numpy arrays. Qubits are numbered from 1 and
qubit 1 is the most significant bit of a computational-basis index, so a
density matrix on ``n`` qubits reshapes to ``(2,) * n + (2,) * n`` with the
row axis of qubit ``k`` at position ``k - 1``.

Functions that act on density matrices accept stacks of shape ``(..., d, d)``;
leading axes are treated as a batch and carried through unchanged.
"""

import numpy as np

STRUCT_TOL = 1e-12
EIG_TOL = 1e-10
PSD_SLACK = -1e-10

PAULI_I = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)

_PAULIS = {"x": PAULI_X, "y": PAULI_Y, "z": PAULI_Z}


def pauli(axis):
    """Return the Pauli matrix for ``axis`` in {'x', 'y', 'z'}."""
    try:
        return _PAULIS[axis.lower()]
    except (KeyError, AttributeError):
        raise ValueError(f"unknown Pauli axis {axis!r}") from None


def kron(*ops):
    """Tensor product of any number of matrices (or vectors), left to right."""
    if not ops:
        raise ValueError("kron needs at least one operand")
    out = np.asarray(ops[0])
    for op in ops[1:]:
        out = np.kron(out, np.asarray(op))
    return out


def dagger(a):
    """Conjugate transpose over the last two axes."""
    return np.conj(np.swapaxes(np.asarray(a), -1, -2))


def num_qubits(dim):
    """Number of qubits for a Hilbert-space dimension ``dim = 2**n``."""
    n = int(dim).bit_length() - 1
    if n < 0 or 1 << n != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    return n


def ket(bits):
    """Computational basis vector for a bit string such as ``'0110'``."""
    if not bits or set(bits) - {"0", "1"}:
        raise ValueError(f"invalid bit string {bits!r}")
    v = np.zeros(2 ** len(bits), dtype=complex)
    v[int(bits, 2)] = 1.0
    return v


def projector(psi):
    """Density matrix ``|psi><psi|`` of a (batch of) state vector(s)."""
    psi = np.asarray(psi, dtype=complex)
    return psi[..., :, None] * np.conj(psi[..., None, :])


def is_hermitian(h, tol=STRUCT_TOL):
    h = np.asarray(h)
    if h.ndim < 2 or h.shape[-1] != h.shape[-2]:
        return False
    return bool(np.max(np.abs(h - dagger(h)), initial=0.0) <= tol)


def check_density_matrix(rho, tol=STRUCT_TOL, psd_slack=PSD_SLACK):
    """Raise ``ValueError`` unless ``rho`` is Hermitian, unit trace and PSD."""
    rho = np.asarray(rho)
    num_qubits(rho.shape[-1])
    if not is_hermitian(rho, tol):
        raise ValueError("density matrix is not Hermitian")
    tr = np.trace(rho, axis1=-2, axis2=-1)
    if np.max(np.abs(tr - 1.0)) > tol:
        raise ValueError("density matrix does not have unit trace")
    if np.min(np.linalg.eigvalsh(rho)) < psd_slack:
        raise ValueError("density matrix has a negative eigenvalue")
    return rho


def _check_subset(indices, n, allow_full):
    subset = sorted(set(int(i) for i in indices))
    if not subset:
        raise ValueError("qubit subset must be nonempty")
    if subset[0] < 1 or subset[-1] > n:
        raise ValueError(f"qubit indices {subset} out of range 1..{n}")
    if not allow_full and len(subset) == n:
        raise ValueError("cannot trace out every qubit")
    return subset


def _as_tensor(rho):
    rho = np.asarray(rho)
    n = num_qubits(rho.shape[-1])
    batch = rho.shape[:-2]
    return rho.reshape(batch + (2,) * (2 * n)), n, batch


def partial_trace(rho, traced):
    """Trace out the qubits in ``traced`` (1-based); remaining order is kept.

    Examples
    --------
    >>> singlet = (ket('01') - ket('10')) / np.sqrt(2)
    >>> np.allclose(partial_trace(projector(singlet), [2]), np.eye(2) / 2)
    True
    """
    t, n, batch = _as_tensor(rho)
    subset = _check_subset(traced, n, allow_full=False)
    nb = len(batch)
    # descending so earlier axis positions stay valid
    for q in reversed(subset):
        t = np.trace(t, axis1=nb + q - 1, axis2=nb + n + q - 1)
        n -= 1
    d = 2**n
    return t.reshape(batch + (d, d))


def reduce_to(rho, keep):
    """Reduced state on the qubits in ``keep`` (order within ``keep`` ignored)."""
    n = num_qubits(np.shape(rho)[-1])
    keep = set(keep)
    traced = [q for q in range(1, n + 1) if q not in keep]
    if not traced:
        return np.asarray(rho)
    return partial_trace(rho, traced)


def partial_transpose(rho, subset):
    """Transpose the row/column indices of the qubits in ``subset`` only."""
    t, n, batch = _as_tensor(rho)
    subset = _check_subset(subset, n, allow_full=True)
    nb = len(batch)
    perm = list(range(t.ndim))
    for q in subset:
        r, c = nb + q - 1, nb + n + q - 1
        perm[r], perm[c] = perm[c], perm[r]
    d = 2**n
    return t.transpose(perm).reshape(batch + (d, d))


def fidelity_pure(rho, psi):
    """Overlap ``<psi|rho|psi>`` clamped to [0, 1]."""
    rho = np.asarray(rho)
    psi = np.asarray(psi, dtype=complex)
    if rho.shape[-1] != psi.shape[-1]:
        raise ValueError(
            f"dimension mismatch: state has {psi.shape[-1]}, matrix has {rho.shape[-1]}"
        )
    f = np.einsum("...i,...ij,...j->...", np.conj(psi), rho, psi).real
    return np.clip(f, 0.0, 1.0)


# ---------------------------------------------------------------------------
# eigenvalue routines


def _jacobi_eigvalsh(h, tol=1e-15, max_sweeps=60):
    """Cyclic Jacobi for a single complex Hermitian matrix."""
    a = np.array(h, dtype=complex)
    n = a.shape[0]
    scale = np.linalg.norm(a)
    if scale == 0.0:
        return np.zeros(n)
    offdiag = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        off = np.linalg.norm(a[offdiag])
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r <= 1e-300:
                    continue
                e = apq / r
                theta = (a[q, q].real - a[p, p].real) / (2.0 * r)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.hypot(1.0, theta))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - s * np.conj(e) * aq
                a[:, q] = s * ap + c * np.conj(e) * aq
                ap, aq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * ap - s * e * aq
                a[q, :] = s * ap + c * e * aq
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
    else:
        raise np.linalg.LinAlgError("Jacobi iteration did not converge")
    return np.diag(a).real.copy()


def eigenvalues_hermitian(h, method="lapack"):
    """Real eigenvalues of a Hermitian matrix, in descending order.

    Parameters
    ----------
    h : array_like, shape (..., d, d)
        Hermitian within 1e-10.
    method : {'lapack', 'jacobi'}
        ``'jacobi'`` runs the in-package cyclic Jacobi solver (unbatched loop
        over any leading axes); ``'lapack'`` defers to ``numpy.linalg``.

    Returns
    -------
    ndarray, shape (..., d)
    """
    h = np.asarray(h)
    if not is_hermitian(h, EIG_TOL):
        raise ValueError("matrix is not Hermitian within tolerance")
    if method == "lapack":
        w = np.linalg.eigvalsh(h)
    elif method == "jacobi":
        flat = h.reshape((-1,) + h.shape[-2:])
        w = np.stack([np.sort(_jacobi_eigvalsh(m)) for m in flat])
        w = w.reshape(h.shape[:-1])
    else:
        raise ValueError(f"unknown method {method!r}")
    return w[..., ::-1]


def hessenberg(m):
    """Upper Hessenberg form of a square matrix by Householder reflections."""
    h = np.array(m, dtype=complex)
    n = h.shape[0]
    for k in range(n - 2):
        x = h[k + 1 :, k]
        alpha = np.linalg.norm(x)
        if alpha == 0.0:
            continue
        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        v = x.copy()
        v[0] += phase * alpha
        v /= np.linalg.norm(v)
        h[k + 1 :, :] -= 2.0 * np.outer(v, np.conj(v) @ h[k + 1 :, :])
        h[:, k + 1 :] -= 2.0 * np.outer(h[:, k + 1 :] @ v, np.conj(v))
        h[k + 2 :, k] = 0.0
    return h


def _givens(a, b):
    r = np.hypot(abs(a), abs(b))
    if r == 0.0:
        return np.eye(2, dtype=complex)
    return np.array([[np.conj(a), np.conj(b)], [-b, a]]) / r


def _shifted_qr_eigvals(m, max_iter=10000):
    h = hessenberg(m)
    n = h.shape[0]
    eps = np.finfo(float).eps
    out = []
    hi = n - 1
    stall = 0
    total = 0
    while hi >= 0:
        if hi == 0:
            out.append(h[0, 0])
            break
        l = hi
        while l > 0:
            if abs(h[l, l - 1]) <= eps * (abs(h[l, l]) + abs(h[l - 1, l - 1])):
                h[l, l - 1] = 0.0
                break
            l -= 1
        if l == hi:
            out.append(h[hi, hi])
            hi -= 1
            stall = 0
            continue
        # Wilkinson shift from the trailing 2x2 of the active block
        a, b = h[hi - 1, hi - 1], h[hi - 1, hi]
        c, d = h[hi, hi - 1], h[hi, hi]
        half = 0.5 * (a + d)
        disc = np.sqrt(half * half - (a * d - b * c))
        mu1, mu2 = half + disc, half - disc
        mu = mu1 if abs(mu1 - d) < abs(mu2 - d) else mu2
        if stall and stall % 11 == 0:
            mu = d + abs(c)
        blk = slice(l, hi + 1)
        sub = h[blk, blk] - mu * np.eye(hi - l + 1)
        rots = []
        for k in range(hi - l):
            g = _givens(sub[k, k], sub[k + 1, k])
            sub[k : k + 2, :] = g @ sub[k : k + 2, :]
            rots.append(g)
        for k, g in enumerate(rots):
            sub[:, k : k + 2] = sub[:, k : k + 2] @ dagger(g)
        h[blk, blk] = sub + mu * np.eye(hi - l + 1)
        stall += 1
        total += 1
        if total > max_iter:
            raise np.linalg.LinAlgError("shifted QR did not converge")
    return np.array(out[::-1])


def eigenvalues_general(m, method="lapack"):
    """Complex spectrum of a square matrix (no ordering guarantee).

    ``method='qr'`` uses the in-package Hessenberg reduction followed by
    Wilkinson-shifted complex QR with deflation.
    """
    m = np.asarray(m)
    if m.ndim < 2 or m.shape[-1] != m.shape[-2]:
        raise ValueError(f"matrix must be square, got shape {m.shape}")
    if method == "lapack":
        return np.linalg.eigvals(m)
    if method == "qr":
        flat = m.reshape((-1,) + m.shape[-2:])
        w = np.stack([_shifted_qr_eigvals(x) for x in flat])
        return w.reshape(m.shape[:-1])
    raise ValueError(f"unknown method {method!r}")


def expm(a, degree=12):
    """Matrix exponential by scaling and squaring with a truncated Taylor series."""
    a = np.asarray(a, dtype=complex)
    norm = np.linalg.norm(a, 1)
    s = max(0, int(np.ceil(np.log2(norm / 0.5)))) if norm > 0.5 else 0
    x = a / 2.0**s
    out = np.eye(a.shape[0], dtype=complex)
    term = np.eye(a.shape[0], dtype=complex)
    for k in range(1, degree + 1):
        term = term @ x / k
        out = out + term
    for _ in range(s):
        out = out @ out
    return out


# ---------------------------------------------------------------------------
# random instances for tests and validation


def random_pure_state(n, rng):
    v = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return v / np.linalg.norm(v)


def random_density_matrix(n, rng, rank=None):
    """Random mixed state from the induced (Ginibre) measure."""
    d = 2**n
    k = d if rank is None else rank
    g = rng.normal(size=(d, k)) + 1j * rng.normal(size=(d, k))
    rho = g @ dagger(g)
    rho = 0.5 * (rho + dagger(rho))
    return rho / np.trace(rho).real


def random_unitary(d, rng):
    z = (rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    ph = np.diag(r) / np.abs(np.diag(r))
    return q * ph
