"""Self-check suites behind ``esdmem validate``.

Each suite returns ``(passed, detail)``. Suites that compare simulation to
analytic fidelities take the closed-form function as an argument so that a
corrupted formula can be injected as a negative control.
"""

import numpy as np

from . import channels, codes, esd, qmatrix
from .channels import NoiseKind
from .codes import DFS4, NS3, StoredQubit
from .esd import MetricId, ThresholdStatus

ORACLE_TOL = 1e-10
WERNER_THRESHOLD = 1.0 - 3.0**-0.5

GRID21 = np.linspace(0.0, 1.0, 21)


def _oracle_grid(code, kind, closed_form, a_grid, b_grid, p_grid):
    worst = 0.0
    for a in a_grid:
        for b in b_grid:
            q = StoredQubit(a, b)
            rho = channels.apply_independent(kind, p_grid, codes.encode(code, q))
            if code is NS3:
                sim = codes.ns3_stored_fidelity(rho, q)
            else:
                sim = codes.state_fidelity(rho, code, q)
            ref = closed_form(code, kind, q, p_grid)
            worst = max(worst, float(np.max(np.abs(sim - ref))))
    return worst


def _oracle_suite(code, kind):
    def suite(rng, closed_form):
        a_grid = np.linspace(0.0, np.pi / 2, 21)
        b_grid = np.linspace(0.0, 2 * np.pi, 21, endpoint=False)
        worst = _oracle_grid(code, kind, closed_form, a_grid, b_grid, GRID21)
        return worst < ORACLE_TOL, f"max |simulated - closed form| = {worst:.3e}"

    return suite


def suite_dfs4_threshold(rng, closed_form):
    q = StoredQubit(0.0, 0.0)
    res = esd.esd_threshold(DFS4, NoiseKind.DEPOLARIZING, q, "neg:1")
    if not res.crossed:
        return False, f"no crossing ({res.status.value})"
    err = abs(res.p_star - WERNER_THRESHOLD)
    fid = closed_form(DFS4, NoiseKind.DEPOLARIZING, q, res.p_star)
    ok = err < 1e-8 and abs(res.p_star - 0.4227) < 5e-4 and abs(fid - 0.25) < 1e-3
    return ok, f"p*={res.p_star:.10f} |p*-analytic|={err:.2e} F(p*)={fid:.6f}"


def suite_ns3_threshold(rng, closed_form):
    details = []
    ok = True
    for a in (0.0, np.pi / 2):
        for metric in ("neg:1", "neg:2", "neg:3"):
            q = StoredQubit(a, 0.0)
            p_star, fid = esd.fidelity_at_threshold(NS3, NoiseKind.DEPOLARIZING, q, metric)
            ref = closed_form(NS3, NoiseKind.DEPOLARIZING, q, p_star)
            ok &= abs(p_star - 0.42486) < 1e-4 and abs(fid - 0.59512) < 1e-3
            ok &= abs(fid - ref) < ORACLE_TOL
        details.append(f"a={a:.4f} p*={p_star:.6f} F={fid:.6f}")
    return ok, "; ".join(details)


def _no_crossing(code, kind, q, metric):
    return esd.esd_threshold(code, kind, q, metric).status is not ThresholdStatus.CROSSING


def suite_no_esd_dephasing(rng, closed_form):
    kind = NoiseKind.DEPHASING
    a_grid = np.linspace(0.0, np.pi / 2, 7)
    b_grid = (0.0, np.pi / 3, np.pi / 2)
    dfs_metrics = ["neg:1", "neg:2", "neg:3", "neg:4"]
    dfs_metrics += [f"neg:{i},{j}" for i in range(1, 5) for j in range(i + 1, 5)]
    dfs_metrics += [f"n3:trace{k}" for k in range(1, 5)]
    bad = [
        (m, a, b)
        for a in a_grid
        for b in b_grid
        for m in dfs_metrics
        if not _no_crossing(DFS4, kind, StoredQubit(a, b), m)
    ]
    ns_metrics = ["neg:1", "neg:2", "neg:3", "conc:1,2", "conc:1,3", "conc:2,3"]
    bad += [
        (m, a, b)
        for a in a_grid
        for b in b_grid
        for m in ns_metrics
        if not _no_crossing(NS3, kind, StoredQubit(a, b), m)
    ]
    fmin = min(closed_form(DFS4, kind, StoredQubit(a, 0.0), 1.0) for a in a_grid)
    ns_min = closed_form(NS3, kind, StoredQubit(0.0, 0.0), 1.0)
    ok = not bad and fmin < 0.5 and abs(ns_min - 1 / 3) < 1e-12
    return ok, f"{len(bad)} crossings found; min DFS4 F={fmin:.4f}; NS3 F(0,1)={ns_min:.6f}"


def _threshold_or_one(code, kind, q, metric):
    res = esd.esd_threshold(code, kind, q, metric)
    if res.status is ThresholdStatus.UNENTANGLED:
        return None
    return res.p_star if res.crossed else 1.0


def suite_ordering(rng, closed_form):
    dep = NoiseKind.DEPOLARIZING
    a_grid = np.linspace(0.0, np.pi / 2, 9)
    n3 = [_threshold_or_one(DFS4, dep, StoredQubit(a, 0.0), "n3") for a in a_grid]
    neg = [
        _threshold_or_one(DFS4, dep, StoredQubit(a, 0.0), f"neg:{k}")
        for a in a_grid
        for k in range(1, 5)
    ]
    n3 = [x for x in n3 if x is not None]
    neg = [x for x in neg if x is not None]
    ok = max(n3) < 0.4 < min(neg)
    msgs = [f"max N3 p*={max(n3):.4f}, min neg p*={min(neg):.4f}"]
    worse = 0
    for a in a_grid:
        for b in (0.0, np.pi / 3, np.pi / 2):
            for pair in ("conc:1,2", "conc:1,3", "conc:1,4"):
                q = StoredQubit(a, b)
                t_dep = _threshold_or_one(DFS4, dep, q, pair)
                t_deph = _threshold_or_one(DFS4, NoiseKind.DEPHASING, q, pair)
                if t_dep is not None and t_deph is not None and not t_dep < t_deph:
                    worse += 1
    msgs.append(f"{worse} depolarizing concurrence thresholds not below dephasing")
    ns_bad = 0
    for a in a_grid:
        q = StoredQubit(a, 0.0)
        neg_ns = min(_threshold_or_one(NS3, dep, q, f"neg:{k}") for k in (1, 2, 3))
        for pair in ("conc:1,2", "conc:1,3", "conc:2,3"):
            if not _threshold_or_one(NS3, dep, q, pair) <= neg_ns:
                ns_bad += 1
    msgs.append(f"{ns_bad} NS3 concurrence thresholds above negativity")
    return ok and worse == 0 and ns_bad == 0, "; ".join(msgs)


def suite_collective_immunity(rng, closed_form):
    worst_dfs = worst_ns = 0.0
    min_state = 1.0
    for _ in range(50):
        axis = rng.choice(["x", "y", "z"])
        theta = rng.uniform(0, 2 * np.pi)
        q = StoredQubit(rng.uniform(0, np.pi / 2), rng.uniform(0, 2 * np.pi))
        u4 = channels.collective_rotation(axis, theta, 4)
        rho4 = u4 @ codes.encode(DFS4, q) @ qmatrix.dagger(u4)
        worst_dfs = max(worst_dfs, abs(1 - codes.state_fidelity(rho4, DFS4, q)))
        u3 = channels.collective_rotation(axis, theta, 3)
        rho3 = u3 @ codes.encode(NS3, q) @ qmatrix.dagger(u3)
        worst_ns = max(worst_ns, abs(1 - codes.ns3_stored_fidelity(rho3, q)))
        min_state = min(min_state, codes.state_fidelity(rho3, NS3, q))
    ok = worst_dfs < 1e-10 and worst_ns < 1e-10 and min_state < 1 - 1e-3
    return ok, (
        f"DFS4 max|1-F|={worst_dfs:.2e}; NS3 stored max|1-F|={worst_ns:.2e}; "
        f"NS3 min state F={min_state:.4f}"
    )


def suite_b_independence(rng, closed_form):
    a_grid = esd.DEFAULT_A_GRID
    c0 = esd.zero_contour(DFS4, NoiseKind.DEPHASING, "conc:1,2", 0.0, a_grid)
    c1 = esd.zero_contour(DFS4, NoiseKind.DEPHASING, "conc:1,2", np.pi / 2, a_grid)
    worst = 0.0
    for (_, r0), (_, r1) in zip(c0, c1):
        if r0.status is not r1.status:
            return False, "status differs between b=0 and b=pi/2"
        if r0.crossed:
            worst = max(worst, abs(r0.p_star - r1.p_star))
    return worst < 1e-8, f"max |p*(b=0) - p*(b=pi/2)| = {worst:.2e} over {len(a_grid)} a values"


def _charpoly(m):
    """Characteristic polynomial coefficients by the Faddeev-LeVerrier recursion."""
    n = m.shape[0]
    coeffs = [1.0 + 0j]
    mk = np.zeros_like(m)
    eye = np.eye(n)
    for k in range(1, n + 1):
        mk = m @ mk + coeffs[-1] * eye
        coeffs.append(-np.trace(m @ mk) / k)
    return np.array(coeffs)


def _multiset_distance(a, b):
    a = list(np.asarray(a, dtype=complex))
    worst = 0.0
    for x in np.asarray(b, dtype=complex):
        i = int(np.argmin([abs(x - y) for y in a]))
        worst = max(worst, abs(x - a.pop(i)))
    return worst


def suite_infrastructure(rng, closed_form):
    msgs = []
    grid = np.linspace(0.0, 1.0, 11)
    cptp = all(
        channels.is_cptp(channels.dephasing_channel(p)) and channels.is_cptp(channels.depolarizing_channel(p))
        for p in grid
    )
    msgs.append(f"CPTP={cptp}")
    worst_prod = 0.0
    for kind in NoiseKind:
        rho = qmatrix.random_density_matrix(3, rng)
        p = rng.uniform()
        explicit = channels.product_kraus(channels.single_qubit_channel(kind, p), 3).apply(rho)
        worst_prod = max(worst_prod, np.max(np.abs(channels.apply_independent(kind, p, rho) - explicit)))
    msgs.append(f"product-Kraus dev={worst_prod:.1e}")
    worst_eig = 0.0
    for _ in range(100):
        h = qmatrix.random_density_matrix(3, rng) - 0.1 * np.eye(8)
        roots = np.roots(_charpoly(h))
        for method in ("jacobi", "lapack"):
            worst_eig = max(worst_eig, _multiset_distance(roots, qmatrix.eigenvalues_hermitian(h, method)))
        g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        roots = np.roots(_charpoly(g))
        for method in ("qr", "lapack"):
            worst_eig = max(worst_eig, _multiset_distance(roots, qmatrix.eigenvalues_general(g, method)))
    msgs.append(f"eig vs charpoly={worst_eig:.1e}")
    spec = esd.SweepSpec(
        DFS4, NoiseKind.DEPOLARIZING, MetricId.parse("neg:1"), np.linspace(0, np.pi / 2, 4), [0.0, 1.0], GRID21
    )
    one = esd.sweep(spec, jobs=1)
    same = np.array_equal(one, esd.sweep(spec, jobs=1)) and np.array_equal(one, esd.sweep(spec, jobs=2))
    msgs.append(f"sweep deterministic={same}")
    ok = cptp and worst_prod < 1e-12 and worst_eig < 1e-8 and same
    return ok, "; ".join(msgs)


SUITES = {
    "dfs4_dephasing_fidelity": _oracle_suite(DFS4, NoiseKind.DEPHASING),
    "dfs4_depolarizing_fidelity": _oracle_suite(DFS4, NoiseKind.DEPOLARIZING),
    "ns3_dephasing_fidelity": _oracle_suite(NS3, NoiseKind.DEPHASING),
    "ns3_depolarizing_fidelity": _oracle_suite(NS3, NoiseKind.DEPOLARIZING),
    "dfs4_depolarizing_threshold": suite_dfs4_threshold,
    "ns3_depolarizing_threshold": suite_ns3_threshold,
    "no_esd_under_dephasing": suite_no_esd_dephasing,
    "threshold_ordering": suite_ordering,
    "collective_immunity": suite_collective_immunity,
    "c12_contour_b_independence": suite_b_independence,
    "infrastructure": suite_infrastructure,
}


def run_validation(seed=0, closed_form=codes.closed_form_fidelity, suites=None):
    """Run suites in a fixed order; returns a list of ``(name, passed, detail)``."""
    names = list(SUITES) if suites is None else list(suites)
    report = []
    for name in names:
        rng = np.random.default_rng([seed, names.index(name)])
        try:
            passed, detail = SUITES[name](rng, closed_form)
        except Exception as exc:  # a crashing suite is a failing suite
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        report.append((name, bool(passed), detail))
    return report
