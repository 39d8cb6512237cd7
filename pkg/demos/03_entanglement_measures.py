# %% [markdown]
# # Entanglement measures
#
# Negativity is the size of the most negative eigenvalue of a partial
# transpose. Concurrence uses the spin-flipped spectrum. N3 is the cube root
# of the three single-qubit negativities of a three-qubit state.

# %%
import numpy as np

from esdmem import entanglement as ent
from esdmem import qmatrix as qm

# %%
# Werner states w|psi-><psi-| + (1 - w) I/4 are entangled only for w > 1/3.
psi = (qm.ket("01") - qm.ket("10")) / np.sqrt(2)
for w in (0.2, 1 / 3, 0.5, 1.0):
    rho = w * qm.projector(psi) + (1 - w) * np.eye(4) / 4
    print(f"w={w:.3f}  negativity={ent.negativity(rho, [1]):.4f}  Lambda={ent.concurrence_lambda(rho):+.4f}")

# %%
# Lambda is the unclamped concurrence. Its sign change is what the threshold
# finder looks for. concurrence() clamps it at zero.
print(ent.concurrence(np.eye(4) / 4), ent.concurrence_lambda(np.eye(4) / 4))

# %%
# GHZ and W states have different tripartite negativity.
ghz = (qm.ket("000") + qm.ket("111")) / np.sqrt(2)
w_state = (qm.ket("001") + qm.ket("010") + qm.ket("100")) / np.sqrt(3)
print("N3(GHZ) =", ent.tripartite_negativity(qm.projector(ghz)))
print("N3(W)   =", ent.tripartite_negativity(qm.projector(w_state)), " sqrt(2)/3 =", np.sqrt(2) / 3)

# %%
# Everything broadcasts over leading axes.
rng = np.random.default_rng(0)
stack = np.stack([qm.random_density_matrix(2, rng) for _ in range(5)])
print(ent.concurrence_lambda(stack))

# %%
# The in-package eigensolvers can be selected explicitly.
h = qm.random_density_matrix(3, rng)
print(np.max(np.abs(qm.eigenvalues_hermitian(h, "jacobi") - qm.eigenvalues_hermitian(h))))
