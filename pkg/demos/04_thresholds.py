# %% [markdown]
# # Where entanglement dies
#
# A threshold search scans p in [0, 1 - 1e-6] and bisects the first change
# from entangled to separable. The result says whether the metric crossed
# zero, never crossed, or had no entanglement to begin with.

# %%
import numpy as np

from esdmem import esd
from esdmem.codes import DFS4, NS3, StoredQubit

q0 = StoredQubit(0.0, 0.0)

# %%
# DFS4 under depolarizing: the first-qubit negativity of |0_L> dies at
# 1 - 3**-0.5, exactly where a Werner state becomes separable.
res = esd.esd_threshold(DFS4, "depolarizing", q0, "neg:1")
print(res.status.value, res.p_star)
print("1 - 3**-0.5 =", 1 - 3**-0.5)
print("fidelity there:", esd.fidelity_at_threshold(DFS4, "depolarizing", q0, "neg:1")[1])

# %%
# Under dephasing the same negativity never vanishes, although the
# fidelity keeps falling.
print(esd.esd_threshold(DFS4, "dephasing", q0, "neg:1").status)
print("F at p = 1:", esd.evaluate_metric(DFS4, "dephasing", q0, 1.0, "fid"))

# %%
# Tripartite negativity goes much earlier than the single-qubit negativities.
for a in np.linspace(0.1, np.pi / 2, 4):
    q = StoredQubit(a, 0.0)
    n3 = esd.esd_threshold(DFS4, "depolarizing", q, "n3")
    neg = esd.esd_threshold(DFS4, "depolarizing", q, "neg:1")
    print(f"a={a:.3f}  N3 dies at {n3.p_star:.4f}   N(1) dies at {neg.p_star:.4f}")

# %%
# NS3 under depolarizing, measured through the decoded qubit.
p_star, fid = esd.fidelity_at_threshold(NS3, "depolarizing", q0, "neg:3")
print(f"NS3: p* = {p_star:.5f}, stored fidelity {fid:.5f}")

# %%
# A zero contour: the threshold as a function of a at fixed b.
for a, r in esd.zero_contour(DFS4, "dephasing", "conc:1,2", b=0.0, a_grid=np.linspace(0, np.pi / 2, 7)):
    print(f"a={a:.3f}  {r.status.value:12s} {r.p_star if r.crossed else ''}")

# %%
# Sweeps give the metric on a full (a, b, p) grid as rows of a, b, p, value.
spec = esd.SweepSpec(DFS4, "depolarizing", "neg:1,2", np.linspace(0, np.pi / 2, 3), [0.0], np.linspace(0, 1, 5))
print(esd.sweep(spec))
