"""Logical encodings protected against collective noise.

Four codes are provided:

``DFS4``
    Four-qubit decoherence-free subspace built from total-spin-zero states.
``NS3``
    Three-qubit noiseless subsystem. The logical qubit labels the two
    spin-1/2 pathways and the gauge label is the S_z value; information is
    read out through a decoding unitary followed by a trace over the gauge.
``DFS2``
    The pair ``|01>, |10>``, immune to collective dephasing.
``PARITY_NS2``
    Two-qubit parity subsystem immune to collective bit flips.
"""

import enum
from dataclasses import dataclass, field

import numpy as np

from .channels import NoiseKind
from .qmatrix import dagger, fidelity_pure, ket, num_qubits, partial_trace, projector

OMEGA = np.exp(2j * np.pi / 3)


class CodeName(enum.Enum):
    DFS4 = "dfs4"
    NS3 = "ns3"
    DFS2 = "dfs2"
    PARITY_NS2 = "parity2"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        key = str(value).lower()
        for member in cls:
            if key in (member.value, member.name.lower()):
                return member
        raise ValueError(f"unknown code {value!r}")


@dataclass(frozen=True)
class StoredQubit:
    """Single-qubit state ``cos(a)|0> + exp(ib) sin(a)|1>``."""

    a: float
    b: float = 0.0

    def canonical(self):
        """Equivalent angles with ``a`` in [0, pi/2] and ``b`` in [0, 2pi)."""
        a = float(np.mod(self.a, np.pi))
        b = float(self.b)
        if a > np.pi / 2:
            a = np.pi - a
            b += np.pi
        return StoredQubit(a, float(np.mod(b, 2 * np.pi)))

    @property
    def vector(self):
        return np.array([np.cos(self.a), np.exp(1j * self.b) * np.sin(self.a)])


@dataclass(frozen=True, eq=False)
class LogicalCode:
    name: CodeName
    n_physical: int
    logical_zero: np.ndarray
    logical_one: np.ndarray
    basis: dict = field(default_factory=dict)
    decoder: np.ndarray | None = None
    gauge_qubits: tuple = ()

    def __repr__(self):
        return f"LogicalCode({self.name.name}, n_physical={self.n_physical})"


def _frozen(v):
    v = np.asarray(v, dtype=complex)
    v.setflags(write=False)
    return v


def dfs4_basis():
    singlet = (ket("01") - ket("10")) / np.sqrt(2)
    zero = np.kron(singlet, singlet)
    one = (
        2 * ket("0011")
        + 2 * ket("1100")
        - ket("0101")
        - ket("1010")
        - ket("0110")
        - ket("1001")
    ) / np.sqrt(12)
    return _frozen(zero), _frozen(one)


def ns3_basis():
    """The four spin-1/2 states keyed by ``(logical, 2*S_z)``.

    Order of insertion follows (0,+1), (0,-1), (1,+1), (1,-1).
    """
    w, w2 = OMEGA, OMEGA**2
    s3 = np.sqrt(3)
    return {
        (0, +1): _frozen((ket("001") + w * ket("010") + w2 * ket("100")) / s3),
        (0, -1): _frozen((ket("110") + w * ket("101") + w2 * ket("011")) / s3),
        (1, +1): _frozen((ket("001") + w2 * ket("010") + w * ket("100")) / s3),
        (1, -1): _frozen((ket("110") + w2 * ket("101") + w * ket("011")) / s3),
    }


def ns3_spin_three_halves():
    """Symmetric S=3/2 quadruplet keyed by ``2*S_z``."""
    s3 = np.sqrt(3)
    return {
        +3: _frozen(ket("000")),
        +1: _frozen((ket("001") + ket("010") + ket("100")) / s3),
        -1: _frozen((ket("110") + ket("101") + ket("011")) / s3),
        -3: _frozen(ket("111")),
    }


def ns3_decoder():
    """8x8 unitary taking the NS3 decomposition to (logical qubit) x (gauge pair).

    The spin-1/2 states go to ``|L>|0 g>`` with ``g = 0`` for S_z = +1/2 and
    ``g = 1`` for S_z = -1/2. The S=3/2 states fill the remaining slots:
    m=-1/2 -> |1>|11>, m=+1/2 -> |1>|10>, m=+3/2 -> |0>|10>, m=-3/2 -> |0>|11>.
    Only the two m=+-1/2 slots influence the stored fidelity, and this choice
    is the one that reproduces the known dephasing and depolarizing curves.
    """
    half = ns3_basis()
    quad = ns3_spin_three_halves()
    images = [
        (half[0, +1], "000"),
        (half[0, -1], "001"),
        (half[1, +1], "100"),
        (half[1, -1], "101"),
        (quad[-1], "111"),
        (quad[+1], "110"),
        (quad[+3], "010"),
        (quad[-3], "011"),
    ]
    u = sum(np.outer(ket(bits), np.conj(src)) for src, bits in images)
    u.setflags(write=False)
    return u


def dfs2_basis():
    return _frozen(ket("01")), _frozen(ket("10"))


def parity_ns2_states():
    """Parity subspaces and the default initial state of the parity subsystem.

    The logical bit is the parity ``q1 xor q2`` and the gauge is qubit 1, so
    ``|g, g xor L>`` carries logical value ``L``. With the gauge fixed to 0
    the code states are the product states ``|00>`` and ``|01>``.
    """
    return {
        "even": (_frozen(ket("00")), _frozen(ket("11"))),
        "odd": (_frozen(ket("01")), _frozen(ket("10"))),
        "initial": _frozen(ket("00")),
    }


def parity_decoder():
    """CNOT(1 -> 2) followed by SWAP: ``|g, g xor L> -> |L, g>``."""
    u = np.zeros((4, 4), dtype=complex)
    for g in (0, 1):
        for logical in (0, 1):
            u[2 * logical + g, 2 * g + (g ^ logical)] = 1.0
    u.setflags(write=False)
    return u


def _build_codes():
    z4, o4 = dfs4_basis()
    ns = ns3_basis()
    z2, o2 = dfs2_basis()
    par = parity_ns2_states()
    return {
        CodeName.DFS4: LogicalCode(CodeName.DFS4, 4, z4, o4, {"0": z4, "1": o4}),
        CodeName.NS3: LogicalCode(
            CodeName.NS3,
            3,
            ns[0, -1],
            ns[1, -1],
            dict(ns),
            decoder=ns3_decoder(),
            gauge_qubits=(2, 3),
        ),
        CodeName.DFS2: LogicalCode(CodeName.DFS2, 2, z2, o2, {"0": z2, "1": o2}),
        CodeName.PARITY_NS2: LogicalCode(
            CodeName.PARITY_NS2,
            2,
            _frozen(ket("00")),
            _frozen(ket("01")),
            {"even": par["even"], "odd": par["odd"]},
            decoder=parity_decoder(),
            gauge_qubits=(2,),
        ),
    }


_CODES = _build_codes()
DFS4 = _CODES[CodeName.DFS4]
NS3 = _CODES[CodeName.NS3]
DFS2 = _CODES[CodeName.DFS2]
PARITY_NS2 = _CODES[CodeName.PARITY_NS2]


def get_code(name):
    if isinstance(name, LogicalCode):
        return name
    return _CODES[CodeName.parse(name)]


def encoded_state(code, q):
    """State vector ``cos a |0_L> + e^{ib} sin a |1_L>`` (NS3: gauge S_z = -1/2)."""
    code = get_code(code)
    q = q.canonical()
    return np.cos(q.a) * code.logical_zero + np.exp(1j * q.b) * np.sin(q.a) * code.logical_one


def encode(code, q):
    """Density matrix of the encoded stored qubit."""
    return projector(encoded_state(code, q))


def state_fidelity(rho, code, q):
    """Overlap of ``rho`` with the noiseless encoded state."""
    code = get_code(code)
    rho = np.asarray(rho)
    if rho.shape[-1] != 2**code.n_physical:
        raise ValueError(f"{code.name.name} acts on {code.n_physical} qubits")
    return fidelity_pure(rho, encoded_state(code, q))


dfs_state_fidelity = state_fidelity


def decode(code, rho):
    """Logical single-qubit state after the decoding unitary and gauge trace."""
    code = get_code(code)
    if code.decoder is None:
        raise ValueError(f"{code.name.name} has no subsystem decoder")
    rho = np.asarray(rho)
    if rho.shape[-1] != 2**code.n_physical:
        raise ValueError(f"{code.name.name} acts on {code.n_physical} qubits")
    u = code.decoder
    return partial_trace(u @ rho @ dagger(u), code.gauge_qubits)


def stored_fidelity(rho, code, q):
    """Fidelity of the decoded logical qubit with the stored input state."""
    return fidelity_pure(decode(code, rho), q.canonical().vector)


def ns3_stored_fidelity(rho, q):
    if num_qubits(np.shape(rho)[-1]) != 3:
        raise ValueError("NS3 stored fidelity needs a 3-qubit density matrix")
    return stored_fidelity(rho, NS3, q)


def _dfs4_dephasing(a, b, p):
    return (48 + p * (11 * p - 48) + p**2 * (np.cos(4 * a) + 2 * np.cos(2 * b) * np.sin(2 * a) ** 2)) / 48


def _dfs4_depolarizing(a, b, p):
    return (
        p**2 * (p - 1) ** 2 * (np.cos(4 * a) + np.cos(2 * b) * (1 - np.cos(4 * a)))
        + 8 * p**4
        - 34 * p**3
        + 59 * p**2
        - 48 * p
        + 16
    ) / 16


def _ns3_dephasing(a, b, p):
    return (12 - 5 * p - p * (2 * np.cos(2 * a) + np.cos(4 * a))) / 12


def _ns3_depolarizing(a, b, p):
    return (4 - p * (5 + p * (p - 4)) - p * (p - 1) ** 2 * np.cos(4 * a)) / 4


CLOSED_FORMS = {
    (CodeName.DFS4, NoiseKind.DEPHASING): _dfs4_dephasing,
    (CodeName.DFS4, NoiseKind.DEPOLARIZING): _dfs4_depolarizing,
    (CodeName.NS3, NoiseKind.DEPHASING): _ns3_dephasing,
    (CodeName.NS3, NoiseKind.DEPOLARIZING): _ns3_depolarizing,
}


def closed_form_fidelity(code, kind, q, p):
    """Analytic fidelity under independent noise of equal strength ``p``.

    DFS4 values are the overlap of the whole four-qubit state with the
    encoded state; NS3 values are the decoded (stored) fidelity.
    """
    key = (get_code(code).name, NoiseKind.parse(kind))
    if key not in CLOSED_FORMS:
        raise ValueError(f"no closed form for {key[0].name} under {key[1].value}")
    p = np.asarray(p, dtype=float)
    if np.any(p < 0) or np.any(p > 1):
        raise ValueError("p must lie in [0, 1]")
    out = CLOSED_FORMS[key](q.a, q.b, p)
    return float(out) if out.ndim == 0 else out
