"""Metric evaluation, parameter sweeps and sudden-death threshold search.

A metric is named by a :class:`MetricId`, written in text as

========  ==================================================
``neg:1`` negativity with the partial transpose on qubit 1
``neg:1,2``  negativity with the partial transpose on qubits 1 and 2
``conc:1,3``  unclamped concurrence of the reduced pair (1, 3)
``n3``    tri-partite negativity (4-qubit states: qubit 4 traced)
``n3:trace2``  tri-partite negativity after tracing qubit 2
``fid``   overlap of the noisy state with the encoded state
``sfid``  fidelity of the decoded stored qubit (subsystem codes)
========  ==================================================

Threshold search works on a signed objective that is positive while the
state is entangled with respect to the metric: ``-lambda_min`` of the
partial transpose for negativities, Lambda for concurrence, and the
smallest of the three single-qubit ``-lambda_min`` values for N3.
"""

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .channels import NoiseKind, apply_independent, collective_depolarizing_channel
from .codes import (
    PARITY_NS2,
    CodeName,
    StoredQubit,
    closed_form_fidelity,
    encode,
    get_code,
    state_fidelity,
    stored_fidelity,
)
from .entanglement import (
    ZERO_TOL,
    concurrence_lambda,
    is_x_form,
    negativity,
    pt_min_eigenvalue,
    tripartite_negativity,
)
from .qmatrix import PAULI_X, dagger, expm, kron, reduce_to

DELTA = 1e-6
SCAN_POINTS = 512
BISECT_XTOL = 1e-10

DEFAULT_A_GRID = np.linspace(0.0, np.pi / 2, 64)
DEFAULT_P_GRID = np.linspace(0.0, 1.0, 256)
DEFAULT_B_VALUES = (0.0, np.pi / 3, np.pi / 2)


class NoThresholdError(LookupError):
    """Raised when a threshold is requested for a metric that shows no sudden death."""


_KINDS = ("neg", "conc", "n3", "fid", "sfid")


@dataclass(frozen=True)
class MetricId:
    kind: str
    qubits: tuple = ()

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown metric kind {self.kind!r}")
        qubits = tuple(int(q) for q in self.qubits)
        if any(q < 1 for q in qubits):
            raise ValueError("qubit indices are 1-based")
        if self.kind == "neg":
            if not qubits:
                raise ValueError("negativity needs a qubit subset")
            qubits = tuple(sorted(set(qubits)))
        elif self.kind == "conc":
            if len(set(qubits)) != 2:
                raise ValueError("concurrence needs two distinct qubits")
            qubits = tuple(sorted(qubits))
        elif self.kind == "n3":
            if len(qubits) > 1:
                raise ValueError("n3 traces at most one qubit")
        elif qubits:
            raise ValueError(f"{self.kind} takes no qubit arguments")
        object.__setattr__(self, "qubits", qubits)

    @classmethod
    def parse(cls, text):
        if isinstance(text, cls):
            return text
        text = text.strip().lower()
        kind, _, args = text.partition(":")
        try:
            if kind == "n3":
                if not args:
                    return cls("n3")
                if not args.startswith("trace"):
                    raise ValueError
                return cls("n3", (int(args[5:]),))
            qubits = tuple(int(x) for x in args.split(",")) if args else ()
        except ValueError:
            raise ValueError(f"cannot parse metric {text!r}") from None
        return cls(kind, qubits)

    def __str__(self):
        if self.kind == "n3":
            return f"n3:trace{self.qubits[0]}" if self.qubits else "n3"
        if self.qubits:
            return f"{self.kind}:{','.join(map(str, self.qubits))}"
        return self.kind

    @property
    def has_threshold(self):
        return self.kind in ("neg", "conc", "n3")


def negativity_metric(*qubits):
    return MetricId("neg", qubits)


def concurrence_metric(j, k):
    return MetricId("conc", (j, k))


def _check_qubits(metric, n):
    if any(q > n for q in metric.qubits):
        raise ValueError(f"metric {metric} refers to qubits beyond {n}")


def _three_qubit_state(rho, metric, n):
    if n == 3:
        if metric.qubits:
            raise ValueError("n3 on a 3-qubit state takes no traced qubit")
        return rho
    if n == 4:
        traced = metric.qubits[0] if metric.qubits else 4
        return reduce_to(rho, [q for q in range(1, 5) if q != traced])
    raise ValueError("n3 needs a 3- or 4-qubit state")


def metric_from_state(rho, code, q, metric):
    """Metric value(s) for (a batch of) noisy states of ``code``."""
    code = get_code(code)
    metric = MetricId.parse(metric)
    n = code.n_physical
    _check_qubits(metric, n)
    if metric.kind == "neg":
        return negativity(rho, metric.qubits)
    if metric.kind == "conc":
        return concurrence_lambda(reduce_to(rho, metric.qubits))
    if metric.kind == "n3":
        return tripartite_negativity(_three_qubit_state(rho, metric, n))
    if metric.kind == "fid":
        return state_fidelity(rho, code, q)
    if code.decoder is None:
        raise ValueError(f"{code.name.name} has no stored-qubit decoder")
    return stored_fidelity(rho, code, q)


def esd_objective(rho, code, metric):
    """Signed entanglement objective; positive means entangled."""
    code = get_code(code)
    metric = MetricId.parse(metric)
    n = code.n_physical
    _check_qubits(metric, n)
    if metric.kind == "neg":
        return -pt_min_eigenvalue(rho, metric.qubits)
    if metric.kind == "conc":
        return concurrence_lambda(reduce_to(rho, metric.qubits))
    if metric.kind == "n3":
        r3 = _three_qubit_state(rho, metric, n)
        return np.min(np.stack([-pt_min_eigenvalue(r3, [k]) for k in (1, 2, 3)]), axis=0)
    raise ValueError(f"metric {metric} has no sudden-death objective")


def noisy_state(code, kind, q, p):
    """Encoded state after independent noise of strength ``p`` (scalar or array)."""
    return apply_independent(kind, p, encode(code, q))


def evaluate_metric(code, kind, q, p, metric):
    code = get_code(code)
    out = metric_from_state(noisy_state(code, kind, q, p), code, q, metric)
    return float(out) if np.ndim(out) == 0 else out


def preferred_fidelity_metric(code):
    """Stored fidelity for subsystem codes, whole-state overlap otherwise."""
    return MetricId("sfid") if get_code(code).decoder is not None else MetricId("fid")


# ---------------------------------------------------------------------------
# thresholds


class ThresholdStatus(enum.Enum):
    CROSSING = "crossing"
    NO_ESD = "no_esd"
    UNENTANGLED = "unentangled"


@dataclass(frozen=True)
class ThresholdResult:
    status: ThresholdStatus
    p_star: float | None = None
    bracket_width: float | None = None
    metric_at_zero_check: float | None = None
    multiple_crossings: bool = False

    @property
    def crossed(self):
        return self.status is ThresholdStatus.CROSSING


def find_threshold(objective, *, n_scan=SCAN_POINTS, delta=DELTA, xtol=BISECT_XTOL, zero_tol=ZERO_TOL):
    """First p in [0, 1 - delta] where a signed objective turns negative.

    ``objective`` maps an array of p values to an array of objective values.
    A uniform scan brackets the first change from entangled (objective above
    ``zero_tol``) to separable (objective below ``-zero_tol``), then
    bisection on the sign narrows the bracket to ``xtol``. An objective that
    only decays into the band ``|f| <= zero_tol`` is not a death: it cannot
    be told apart from a positive tail at double precision.
    """
    ps = np.linspace(0.0, 1.0 - delta, n_scan)
    f = np.asarray(objective(ps))
    if not f[0] > zero_tol:
        return ThresholdResult(ThresholdStatus.UNENTANGLED)
    signs = np.where(f > zero_tol, 1, np.where(f < -zero_tol, -1, 0))
    dead = np.flatnonzero(signs < 0)
    if dead.size == 0:
        return ThresholdResult(ThresholdStatus.NO_ESD)
    k_dead = dead[0]
    k_alive = np.flatnonzero(signs[:k_dead] > 0)[-1]
    resolved = signs[signs != 0]
    n_deaths = np.count_nonzero((resolved[:-1] > 0) & (resolved[1:] < 0))
    lo, hi = ps[k_alive], ps[k_dead]
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        if float(objective(np.array([mid]))[0]) > 0.0:
            lo = mid
        else:
            hi = mid
    p_star = 0.5 * (lo + hi)
    check = float(objective(np.array([p_star]))[0])
    return ThresholdResult(ThresholdStatus.CROSSING, float(p_star), float(hi - lo), check, bool(n_deaths > 1))


def esd_threshold(code, kind, q, metric, **kwargs):
    """Locate the sudden-death point of ``metric`` for stored qubit ``q``."""
    code = get_code(code)
    metric = MetricId.parse(metric)
    if not metric.has_threshold:
        raise ValueError(f"metric {metric} has no sudden-death objective")
    rho0 = encode(code, q)

    def objective(ps):
        return esd_objective(apply_independent(kind, ps, rho0), code, metric)

    return find_threshold(objective, **kwargs)


def fidelity_at_threshold(code, kind, q, metric, **kwargs):
    """``(p_star, fidelity)`` at the sudden-death point of ``metric``.

    The fidelity is the simulated stored fidelity for subsystem codes and
    the whole-state overlap otherwise.
    """
    res = esd_threshold(code, kind, q, metric, **kwargs)
    if not res.crossed:
        raise NoThresholdError(f"{metric} shows no sudden death ({res.status.value})")
    fid = evaluate_metric(code, kind, q, res.p_star, preferred_fidelity_metric(code))
    return res.p_star, fid


def closed_form_at_threshold(code, kind, q, metric):
    """Threshold paired with the analytic fidelity, for cross-checking."""
    p_star, _ = fidelity_at_threshold(code, kind, q, metric)
    return p_star, closed_form_fidelity(code, kind, q, p_star)


def _contour_point(args):
    code_name, kind, metric, a, b = args
    return esd_threshold(code_name, kind, StoredQubit(a, b), metric)


def _pool_map(fn, items, jobs):
    jobs = default_jobs() if jobs is None else int(jobs)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(jobs, len(items))) as pool:
        return list(pool.map(fn, items))


def default_jobs():
    return os.cpu_count() or 1


def zero_contour(code, kind, metric, b, a_grid=DEFAULT_A_GRID, jobs=1):
    """Threshold for each ``a`` at fixed ``b``: a list of ``(a, ThresholdResult)``."""
    code = get_code(code)
    metric = MetricId.parse(metric)
    kind = NoiseKind.parse(kind)
    a_grid = [float(a) for a in a_grid]
    items = [(code.name, kind, metric, a, float(b)) for a in a_grid]
    return list(zip(a_grid, _pool_map(_contour_point, items, jobs)))


# ---------------------------------------------------------------------------
# sweeps


def _strictly_increasing(name, grid, lo, hi, hi_open=False):
    grid = np.asarray(grid, dtype=float).ravel()
    if grid.size == 0:
        raise ValueError(f"{name} grid is empty")
    if np.any(np.diff(grid) <= 0):
        raise ValueError(f"{name} grid must be strictly increasing")
    tol = 1e-12
    if grid[0] < lo - tol or grid[-1] > hi + tol or (hi_open and grid[-1] >= hi):
        raise ValueError(f"{name} grid leaves its range")
    return grid


@dataclass(frozen=True, eq=False)
class SweepSpec:
    code: object
    kind: NoiseKind
    metric: MetricId
    a_grid: np.ndarray
    b_grid: np.ndarray
    p_grid: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "code", get_code(self.code))
        object.__setattr__(self, "kind", NoiseKind.parse(self.kind))
        object.__setattr__(self, "metric", MetricId.parse(self.metric))
        object.__setattr__(self, "a_grid", _strictly_increasing("a", self.a_grid, 0.0, np.pi / 2))
        object.__setattr__(
            self, "b_grid", _strictly_increasing("b", self.b_grid, 0.0, 2 * np.pi, hi_open=True)
        )
        object.__setattr__(self, "p_grid", _strictly_increasing("p", self.p_grid, 0.0, 1.0))


def _sweep_curve(args):
    code_name, kind, metric, a, b, p_grid = args
    q = StoredQubit(a, b)
    vals = metric_from_state(noisy_state(code_name, kind, q, p_grid), code_name, q, metric)
    return np.asarray(vals, dtype=float)


def sweep(spec, jobs=1):
    """Metric over the full grid as an ``(N, 4)`` array of ``a, b, p, value``.

    Rows run with ``a`` slowest and ``p`` fastest. Each ``(a, b)`` curve is
    computed as one unit, so the output does not depend on ``jobs``.
    """
    pairs = [(a, b) for a in spec.a_grid for b in spec.b_grid]
    items = [
        (spec.code.name, spec.kind, spec.metric, float(a), float(b), spec.p_grid) for a, b in pairs
    ]
    curves = _pool_map(_sweep_curve, items, jobs)
    rows = []
    for (a, b), vals in zip(pairs, curves):
        block = np.empty((spec.p_grid.size, 4))
        block[:, 0] = a
        block[:, 1] = b
        block[:, 2] = spec.p_grid
        block[:, 3] = vals
        rows.append(block)
    return np.concatenate(rows)


# ---------------------------------------------------------------------------
# two-qubit protected states


def collective_flip_rotation(theta, n=2):
    """``exp(-i theta X...X)``: a partial collective bit flip (theta = pi/2 is a full flip)."""
    return expm(-1j * theta * kron(*[PAULI_X] * n))


def dfs2_report(q=StoredQubit(np.pi / 4, np.pi)):
    """Concurrence sudden death of a DFS2 state under two depolarizing models.

    Returns thresholds of Lambda for independent and for collective
    depolarizing (the same Pauli on both qubits), plus whether the
    independently depolarized state keeps the X form at a sample strength.
    """
    rho0 = encode(CodeName.DFS2, q)
    conc = MetricId("conc", (1, 2))

    def collective(ps):
        return np.array(
            [concurrence_lambda(collective_depolarizing_channel(p, 2).apply(rho0)) for p in ps]
        )

    sample = apply_independent(NoiseKind.DEPOLARIZING, 0.3, rho0)
    return {
        "independent": esd_threshold(CodeName.DFS2, NoiseKind.DEPOLARIZING, q, conc),
        "collective": find_threshold(collective),
        "x_form_independent": is_x_form(sample),
    }


def parity_ns2_report(theta, q=StoredQubit(0.0, 0.0)):
    """Entanglement made by a partial collective flip on the parity subsystem.

    The encoded parity state is rotated by ``collective_flip_rotation(theta)``
    and then exposed to each independent noise kind. Reports the initial
    concurrence, the stored fidelity after the rotation, and one concurrence
    threshold per noise kind.
    """
    u = collective_flip_rotation(theta)
    rho0 = u @ encode(PARITY_NS2, q) @ dagger(u)
    out = {
        "initial_concurrence": float(concurrence_lambda(rho0)),
        "stored_fidelity": float(stored_fidelity(rho0, PARITY_NS2, q)),
    }
    for kind in NoiseKind:
        out[kind.value] = find_threshold(
            lambda ps, kind=kind: concurrence_lambda(apply_independent(kind, ps, rho0))
        )
    return out
