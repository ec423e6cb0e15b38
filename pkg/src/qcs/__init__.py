"""Qubit coherent states: geometry, entangled bases, energy surfaces, dynamics.

Conventions used throughout:

- A single-qubit coherent state |psi> has amplitude ratio psi = a1/a0, so
  psi = 0 is |0> and the point at infinity is |1>.  Labels live on the
  extended complex plane (`ComplexPoint`, `INFINITY`) which maps to the
  unit sphere by stereographic projection from the south pole.
- Multi-qubit kets order tensor factors most-significant-first: amplitude
  index 0b10 of a two-qubit state is qubit 1 in |1> and qubit 2 in |0>.
- hbar is an explicit parameter (default 1.0) everywhere it matters.
"""

from .complex_geometry import (
    INFINITY,
    ComplexPoint,
    MobiusMap,
    SpherePoint,
    SymmetryKind,
    cross_ratio,
    mobius_apply,
    stereo_lift,
    stereo_project,
    symmetric_point,
)
from .coherent_states import (
    PureState,
    SpinJState,
    amplitude_ratio,
    canonical_phase,
    coherent,
    equal_up_to_phase,
    expand_in_antipodal_basis,
    from_bloch,
    overlap,
    spin_j_coherent,
    spin_j_overlap,
    spin_j_overlap_closed,
    symmetric_state,
)
from .entangled_basis import (
    STATE_IDS,
    BellExpansion,
    bell_states,
    coherent_basis_2q,
    entangled_basis_2q,
    entangled_basis_3q,
    entangled_state,
    expand_in_entangled_basis,
    ghz_state,
    product_state,
    reconstruct_from_expansion,
    w_state,
)
from .entanglement_measures import (
    DensityMatrix,
    SpinSumAverages,
    concurrence_det,
    concurrence_from_expansion,
    concurrence_rdm,
    density,
    partial_trace,
    spin_sum_averages,
)
from .errors import (
    BadParams,
    BadSubsystem,
    DegenerateTriple,
    DimensionMismatch,
    FormulaUnavailable,
    InfinitePoint,
    NoConvergence,
    NotNormalized,
    QcsError,
)
from .evolution import (
    Revival,
    TimeSeries,
    closed_form_fidelity,
    concurrence_series,
    evolve,
    exchange_hamiltonian,
    fidelity_series,
    revival_time,
)
from .gates import (
    UnitaryGate,
    coherent_generator,
    coherent_hadamard_basis,
    gate_cnot,
    gate_hadamard,
    gate_not,
    gate_phase,
    induced_mobius,
)
from .spin_models import (
    CouplingParams,
    Extremum,
    SurfaceGrid,
    energy_surface,
    hamiltonian,
    q_symbol_closed,
    q_symbol_direct,
    q_symbol_pair,
)
from .verify import format_report, run_suite

__version__ = "0.1.0"

__all__ = [
    "BadParams",
    "BadSubsystem",
    "BellExpansion",
    "ComplexPoint",
    "CouplingParams",
    "DegenerateTriple",
    "DensityMatrix",
    "DimensionMismatch",
    "Extremum",
    "FormulaUnavailable",
    "INFINITY",
    "InfinitePoint",
    "MobiusMap",
    "NoConvergence",
    "NotNormalized",
    "PureState",
    "QcsError",
    "Revival",
    "STATE_IDS",
    "SpherePoint",
    "SpinJState",
    "SpinSumAverages",
    "SurfaceGrid",
    "SymmetryKind",
    "TimeSeries",
    "UnitaryGate",
    "amplitude_ratio",
    "bell_states",
    "canonical_phase",
    "closed_form_fidelity",
    "coherent",
    "coherent_basis_2q",
    "coherent_generator",
    "coherent_hadamard_basis",
    "concurrence_det",
    "concurrence_from_expansion",
    "concurrence_rdm",
    "concurrence_series",
    "cross_ratio",
    "density",
    "energy_surface",
    "entangled_basis_2q",
    "entangled_basis_3q",
    "entangled_state",
    "equal_up_to_phase",
    "evolve",
    "exchange_hamiltonian",
    "expand_in_antipodal_basis",
    "expand_in_entangled_basis",
    "fidelity_series",
    "format_report",
    "from_bloch",
    "gate_cnot",
    "gate_hadamard",
    "gate_not",
    "gate_phase",
    "ghz_state",
    "hamiltonian",
    "induced_mobius",
    "mobius_apply",
    "overlap",
    "partial_trace",
    "product_state",
    "q_symbol_closed",
    "q_symbol_direct",
    "q_symbol_pair",
    "reconstruct_from_expansion",
    "revival_time",
    "run_suite",
    "spin_j_coherent",
    "spin_j_overlap",
    "spin_j_overlap_closed",
    "spin_sum_averages",
    "stereo_lift",
    "stereo_project",
    "symmetric_point",
    "symmetric_state",
    "w_state",
]
