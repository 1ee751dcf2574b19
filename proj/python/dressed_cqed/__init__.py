"""Dressed-state spectrum, criticality, and transitions of two Ising-coupled
charge qubits in a transmission-line resonator."""

from ._core import (
    CrossingPoint,
    DressedState,
    ModelParams,
    Propagator,
    RegionInfo,
    W1System,
    WnSystem,
    apply_qubit_operator,
    classify_region,
    crossing_point,
    damping_ratio,
    device_to_model,
    dressed_levels,
    dressed_rabi_frequency,
    hq_phase,
    ket_index,
    mixing_angle,
    oracle_levels,
    perturbative_shift,
    rabi_splitting,
    selection_rules,
    singlet_level,
    singlet_population,
    singlet_state,
    transition_amplitude,
    w0_level,
    w0_state,
    w1_eigensystem,
    wn_eigensystem,
    xi0,
    xi1,
)

__all__ = [
    "CrossingPoint",
    "DressedState",
    "ModelParams",
    "Propagator",
    "RegionInfo",
    "W1System",
    "WnSystem",
    "apply_qubit_operator",
    "classify_region",
    "crossing_point",
    "damping_ratio",
    "device_to_model",
    "dressed_levels",
    "dressed_rabi_frequency",
    "hq_phase",
    "ket_index",
    "mixing_angle",
    "oracle_levels",
    "perturbative_shift",
    "rabi_splitting",
    "selection_rules",
    "singlet_level",
    "singlet_population",
    "singlet_state",
    "transition_amplitude",
    "w0_level",
    "w0_state",
    "w1_eigensystem",
    "wn_eigensystem",
    "xi0",
    "xi1",
]

__version__ = "1.0.0"
