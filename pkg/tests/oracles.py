"""Reference implementations used only by the tests.

These are written from definitions (index sums, characteristic polynomials,
textbook closed forms) and share no code with the package.
"""

import itertools

import mpmath
import numpy as np

# Fidelity formulas, transcribed directly.


def dfs4_dephasing(a, b, p):
    return (48 + p * (11 * p - 48) + p**2 * (np.cos(4 * a) + 2 * np.cos(2 * b) * np.sin(2 * a) ** 2)) / 48


def dfs4_depolarizing(a, b, p):
    return (
        p**2 * (p - 1) ** 2 * (np.cos(4 * a) + np.cos(2 * b) * (1 - np.cos(4 * a)))
        + 8 * p**4 - 34 * p**3 + 59 * p**2 - 48 * p + 16
    ) / 16


def ns3_dephasing(a, p):
    return (12 - 5 * p - p * (2 * np.cos(2 * a) + np.cos(4 * a))) / 12


def ns3_depolarizing(a, p):
    return (4 - p * (5 + p * (p - 4)) - p * (p - 1) ** 2 * np.cos(4 * a)) / 4


# The Werner state w|psi-><psi-| + (1-w) I/4 under independent depolarizing
# keeps its form with w -> (1-p)^2 w; its partial transpose has smallest
# eigenvalue (1 - 3w)/4, so separability sets in at (1-p)^2 = 1/3.
WERNER_DEPOL_THRESHOLD = 1.0 - 3.0**-0.5


def werner(w):
    psi = np.array([0, 1, -1, 0]) / np.sqrt(2)
    return w * np.outer(psi, psi) + (1 - w) * np.eye(4) / 4


def bits(index, n):
    return [(index >> (n - 1 - k)) & 1 for k in range(n)]


def state_from_terms(terms, n):
    """Vector from a dict {bitstring: amplitude}."""
    v = np.zeros(2**n, dtype=complex)
    for s, amp in terms.items():
        v[int(s, 2)] += amp
    return v


def dfs4_logical():
    zero = state_from_terms({"0101": 1, "0110": -1, "1001": -1, "1010": 1}, 4) / 2
    one = state_from_terms(
        {"0011": 2, "1100": 2, "0101": -1, "1010": -1, "0110": -1, "1001": -1}, 4
    ) / np.sqrt(12)
    return zero, one


def partial_trace_loops(rho, traced):
    """Partial trace by an explicit sum over basis indices (qubit 1 = MSB)."""
    d = rho.shape[0]
    n = d.bit_length() - 1
    keep = [q for q in range(1, n + 1) if q not in traced]
    dk = 2 ** len(keep)
    out = np.zeros((dk, dk), dtype=complex)
    for i in range(d):
        bi = bits(i, n)
        for j in range(d):
            bj = bits(j, n)
            if any(bi[q - 1] != bj[q - 1] for q in traced):
                continue
            r = int("".join(str(bi[q - 1]) for q in keep), 2)
            c = int("".join(str(bj[q - 1]) for q in keep), 2)
            out[r, c] += rho[i, j]
    return out


def partial_transpose_loops(rho, subset):
    d = rho.shape[0]
    n = d.bit_length() - 1
    out = np.zeros_like(rho)
    for i in range(d):
        for j in range(d):
            bi, bj = bits(i, n), bits(j, n)
            for q in subset:
                bi[q - 1], bj[q - 1] = bj[q - 1], bi[q - 1]
            out[int("".join(map(str, bi)), 2), int("".join(map(str, bj)), 2)] = rho[i, j]
    return out


def kron_entry(a, b, i, j):
    """Entry (i, j) of a (x) b from the index formula."""
    p, q = b.shape
    return a[i // p, j // q] * b[i % p, j % q]


def product_channel_loops(kraus, rho, n):
    """Apply the same single-qubit Kraus set to every qubit via all k**n products."""
    out = np.zeros_like(rho)
    for combo in itertools.product(kraus, repeat=n):
        k = combo[0]
        for op in combo[1:]:
            k = np.kron(k, op)
        out += k @ rho @ k.conj().T
    return out


def charpoly_roots(m, dps=40):
    """Eigenvalues as roots of det(xI - M), both computed in extended precision."""
    mm = mpmath.matrix([[mpmath.mpc(complex(x)) for x in row] for row in m])
    n = m.shape[0]
    with mpmath.workdps(dps):
        # Faddeev-LeVerrier in high precision
        coeffs = [mpmath.mpc(1)]
        mk = mpmath.zeros(n, n)
        for k in range(1, n + 1):
            mk = mm * mk + coeffs[-1] * mpmath.eye(n)
            prod = mm * mk
            coeffs.append(-sum(prod[i, i] for i in range(n)) / k)
        roots = mpmath.polyroots(coeffs, maxsteps=400, extraprec=2 * dps)
    return np.array([complex(r) for r in roots])


def match_spectra(a, b):
    """Largest distance after greedily pairing each element of b with its nearest in a."""
    a = list(np.asarray(a, dtype=complex))
    worst = 0.0
    for x in np.asarray(b, dtype=complex):
        i = int(np.argmin([abs(x - y) for y in a]))
        worst = max(worst, abs(x - a.pop(i)))
    return worst


def pure_concurrence(psi):
    """2|ad - bc| for psi = a|00> + b|01> + c|10> + d|11>."""
    a, b, c, d = psi
    return 2 * abs(a * d - b * c)


def schmidt_min_pt_eigenvalue(psi, dims):
    """Most negative eigenvalue of the partial transpose of a pure bipartite state.

    For Schmidt coefficients s_i the PT spectrum holds s_i^2 and +-s_i s_j;
    the smallest is -s_1 s_2 for the two largest.
    """
    s = np.linalg.svd(psi.reshape(dims), compute_uv=False)
    return -s[0] * s[1] if s.size > 1 else 0.0
