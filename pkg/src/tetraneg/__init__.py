"""Exact diagonalization and entanglement negativities of the mixed
spin-(1/2,1) Heisenberg tetramer."""

from ._backend import backend_name, have_compiled
from .model import (
    ModelParams,
    QuantumLabel,
    Spectrum,
    ThermalState,
    all_labels,
    build_hamiltonian,
    classify_ground_state,
    closed_form_energy,
    diagonalize,
    eigenspace_state,
    gibbs_state,
    ground_manifold,
)
from .negativity import (
    NegativityReport,
    TripartiteReport,
    genuine_tripartite,
    negativity,
    one_vs_two_negativity,
    partial_transpose,
    two_spin_negativity,
)
from .reductions import ReducedDensity, pair_rdm, partial_trace, trimer_rdm
from .scan import (
    Axis,
    PhaseBoundary,
    ScanGrid,
    ScanRecord,
    field_scan,
    phase_boundaries,
    thermal_scan,
    threshold_profile,
)
from .spin_algebra import (
    TETRAMER,
    ClusterLayout,
    SpinSite,
    embed,
    heisenberg_dot,
    spin_ladder,
    spin_z,
    total_sz,
)

__version__ = "0.1.0"

__all__ = [
    "Axis",
    "ClusterLayout",
    "ModelParams",
    "NegativityReport",
    "PhaseBoundary",
    "QuantumLabel",
    "ReducedDensity",
    "ScanGrid",
    "ScanRecord",
    "Spectrum",
    "SpinSite",
    "TETRAMER",
    "ThermalState",
    "TripartiteReport",
    "all_labels",
    "backend_name",
    "build_hamiltonian",
    "classify_ground_state",
    "closed_form_energy",
    "diagonalize",
    "eigenspace_state",
    "embed",
    "field_scan",
    "genuine_tripartite",
    "gibbs_state",
    "ground_manifold",
    "have_compiled",
    "heisenberg_dot",
    "negativity",
    "one_vs_two_negativity",
    "pair_rdm",
    "partial_trace",
    "partial_transpose",
    "phase_boundaries",
    "spin_ladder",
    "spin_z",
    "thermal_scan",
    "threshold_profile",
    "total_sz",
    "trimer_rdm",
    "two_spin_negativity",
]
