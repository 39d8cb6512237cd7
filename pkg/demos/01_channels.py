# %% [markdown]
# # Noise channels on a few qubits
#
# Density matrices are plain numpy arrays. Qubits are numbered from 1, with
# qubit 1 the leftmost bit of a basis label.

# %%
import numpy as np

from esdmem import channels, qmatrix

# %%
# Single-qubit dephasing keeps populations and shrinks coherences by sqrt(1 - p).
plus = qmatrix.projector((qmatrix.ket("0") + qmatrix.ket("1")) / np.sqrt(2))
deph = channels.dephasing_channel(0.36)
print(deph.apply(plus).real)

# %%
# Depolarizing shrinks the whole Bloch vector by (1 - p).
zero = qmatrix.projector(qmatrix.ket("0"))
out = channels.depolarizing_channel(0.3).apply(zero)
print("<Z> after p=0.3:", np.trace(out @ qmatrix.PAULI_Z).real)

# %%
# Both families are trace preserving for every strength.
for p in np.linspace(0, 1, 5):
    print(p, channels.is_cptp(channels.dephasing_channel(p)), channels.is_cptp(channels.depolarizing_channel(p)))

# %%
# Independent noise on every qubit. Passing an array of strengths gives a
# stack of output states, one per strength.
rho = qmatrix.random_density_matrix(3, np.random.default_rng(1))
ps = np.linspace(0, 1, 4)
stack = channels.apply_independent("depolarizing", ps, rho)
print(stack.shape)
print("p=1 gives I/8:", np.allclose(stack[-1], np.eye(8) / 8))

# %%
# The fast path agrees with the explicit 4**3 product Kraus operators.
explicit = channels.product_kraus(channels.depolarizing_channel(0.4), 3).apply(rho)
print(np.max(np.abs(channels.apply_independent("depolarizing", 0.4, rho) - explicit)))

# %%
# Noise strength from elapsed time, p = 1 - exp(-kappa tau).
tm = channels.TimeMap(kappa=0.5)
print(channels.p_of_time(tm, np.array([0.0, 1.0, 2.0, 10.0])))
