# %% [markdown]
# # Encoded memories and their fidelity
#
# Two memories are built in: a four-qubit decoherence-free subspace (DFS4)
# and a three-qubit noiseless subsystem (NS3). A stored qubit is
# cos(a)|0> + exp(ib) sin(a)|1>.

# %%
import numpy as np

from esdmem import channels, codes
from esdmem.codes import DFS4, NS3, StoredQubit

q = StoredQubit(a=np.pi / 5, b=np.pi / 3)

# %%
# Collective rotations (the same unitary on every qubit) leave DFS4 states alone.
u = channels.collective_rotation("y", 1.234, 4)
rho = u @ codes.encode(DFS4, q) @ u.conj().T
print("DFS4 fidelity after a collective rotation:", codes.state_fidelity(rho, DFS4, q))

# %%
# For NS3 the rotation moves the gauge degree of freedom, so the overlap with
# the encoded three-qubit state drops. The decoded logical qubit is untouched.
u3 = channels.collective_rotation("x", np.pi / 2, 3)
rho3 = u3 @ codes.encode(NS3, q) @ u3.conj().T
print("NS3 three-qubit overlap:", codes.state_fidelity(rho3, NS3, q))
print("NS3 stored fidelity:    ", codes.ns3_stored_fidelity(rho3, q))

# %%
# Under independent noise the simulated fidelities follow known polynomials in p.
ps = np.linspace(0, 1, 6)
for code in (DFS4, NS3):
    for kind in ("dephasing", "depolarizing"):
        rho_p = channels.apply_independent(kind, ps, codes.encode(code, q))
        sim = codes.ns3_stored_fidelity(rho_p, q) if code is NS3 else codes.state_fidelity(rho_p, code, q)
        ref = codes.closed_form_fidelity(code, kind, q, ps)
        print(f"{code.name.value:5s} {kind:13s}", np.round(sim, 4), "max diff", np.max(np.abs(sim - ref)))

# %%
# Limits worth remembering: DFS4 under full depolarizing is I/16, so F = 1/16.
# NS3 falls to 1/3 (dephasing, a=0) and 1/2 (depolarizing).
print(codes.closed_form_fidelity(DFS4, "depolarizing", q, 1.0))
print(codes.closed_form_fidelity(NS3, "dephasing", StoredQubit(0.0), 1.0))
print(codes.closed_form_fidelity(NS3, "depolarizing", q, 1.0))
