"""Entanglement sudden death in few-qubit quantum memories.

Density-matrix simulation of logical qubits stored in a four-qubit
decoherence-free subspace and a three-qubit noiseless subsystem under
independent dephasing or depolarizing noise, with negativity, concurrence
and tri-partite negativity, stored-information fidelity, and a threshold
finder for the point where entanglement vanishes.
"""

from .channels import (
    KrausChannel,
    NoiseKind,
    TimeMap,
    apply_independent,
    apply_single,
    collective_rotation,
    dephasing_channel,
    depolarizing_channel,
    is_cptp,
    p_of_time,
)
from .codes import (
    DFS2,
    DFS4,
    NS3,
    PARITY_NS2,
    LogicalCode,
    StoredQubit,
    closed_form_fidelity,
    encode,
    get_code,
    ns3_stored_fidelity,
    state_fidelity,
    stored_fidelity,
)
from .entanglement import (
    NumericalError,
    concurrence,
    concurrence_lambda,
    is_x_form,
    negativity,
    tripartite_negativity,
)
from .esd import (
    MetricId,
    NoThresholdError,
    SweepSpec,
    ThresholdResult,
    ThresholdStatus,
    esd_threshold,
    evaluate_metric,
    fidelity_at_threshold,
    sweep,
    zero_contour,
)
from .qmatrix import partial_trace, partial_transpose

__version__ = "0.1.0"

__all__ = [
    "DFS2",
    "DFS4",
    "NS3",
    "PARITY_NS2",
    "KrausChannel",
    "LogicalCode",
    "MetricId",
    "NoThresholdError",
    "NoiseKind",
    "NumericalError",
    "StoredQubit",
    "SweepSpec",
    "ThresholdResult",
    "ThresholdStatus",
    "TimeMap",
    "apply_independent",
    "apply_single",
    "closed_form_fidelity",
    "collective_rotation",
    "concurrence",
    "concurrence_lambda",
    "dephasing_channel",
    "depolarizing_channel",
    "encode",
    "esd_threshold",
    "evaluate_metric",
    "fidelity_at_threshold",
    "get_code",
    "is_cptp",
    "is_x_form",
    "negativity",
    "ns3_stored_fidelity",
    "p_of_time",
    "partial_trace",
    "partial_transpose",
    "state_fidelity",
    "stored_fidelity",
    "sweep",
    "tripartite_negativity",
    "zero_contour",
]
